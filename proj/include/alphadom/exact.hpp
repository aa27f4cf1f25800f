#pragma once

#include <cstdint>
#include <vector>

#include <json.hpp>

#include "alphadom/domination.hpp"
#include "alphadom/graph.hpp"

namespace alphadom {

// Hard cap for the brute-force solver; it is a desk-scale oracle, not a
// scalable solver.
inline constexpr int kMaxExactVertices = 24;

struct ExactResult {
    int value;
    std::vector<int> witness;  // lexicographically least minimum witness
    Mode mode;
    std::uint64_t nodes_explored;

    nlohmann::ordered_json to_json() const;
};

// Sound search floor: never exceeds the true optimum. Uses the degree/edge
// lower bounds for the alpha modes and coverage-count floors otherwise,
// all in integer arithmetic.
int exact_lower_bound(const Graph& g, const Mode& mode);

// Exhaustive minimum: enumerates candidate sizes ascending from the floor
// and, per size, k-subsets in lexicographic order with an optimistic
// per-vertex prune, so the first valid set found is the lexicographically
// least one of minimum size.
ExactResult exact_number(const Graph& g, const Mode& mode);

}  // namespace alphadom
