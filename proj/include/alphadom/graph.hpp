#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace alphadom {

// Text-parsing failure carrying the 1-based line number.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// Immutable simple undirected graph. Vertices are 0..n-1. Adjacency lists are
// sorted ascending and the edge list is sorted with u < v, so every iteration
// order downstream is deterministic.
class Graph {
public:
    // Canonicalizes the edge set: normalizes pair order, drops duplicates
    // (counted), rejects self-loops and out-of-range endpoints.
    static Graph build(int n, std::vector<std::pair<int, int>> edges);

    int n() const { return n_; }
    long long m() const { return static_cast<long long>(edges_.size()); }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    int min_degree() const { return min_degree_; }
    int max_degree() const { return max_degree_; }
    bool has_edge(int u, int v) const;

    // Number of duplicate pairs collapsed by build().
    int duplicates_collapsed() const { return duplicates_collapsed_; }

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    Graph() = default;

    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
    int min_degree_ = 0;
    int max_degree_ = 0;
    int duplicates_collapsed_ = 0;
};

// --- text formats ---------------------------------------------------------

// Lines "u v", '#' starts a comment line, optional leading "n <count>" line.
// base selects 0- or 1-based vertex numbering; without a header n is the
// largest adjusted index plus one.
Graph parse_edge_list(std::string_view text, int base = 0);

// DIMACS: 'c' comment lines, one "p edge <n> <m>" line, then m lines
// "e u v" with 1-based endpoints. The declared m must match the number of
// distinct parsed edges.
Graph parse_dimacs(std::string_view text);

// Picks parse_dimacs or parse_edge_list from the first meaningful token.
Graph parse_auto(std::string_view text);

// Canonical serializations; parse(to_*(g)) reproduces g exactly and
// to_*(parse(text)) is byte-identical for canonical inputs.
std::string to_edge_list(const Graph& g);
std::string to_dimacs(const Graph& g);

// --- generators -----------------------------------------------------------

Graph gen_cycle(int n);     // n >= 3
Graph gen_path(int n);      // n >= 1
Graph gen_complete(int n);  // n >= 1
Graph gen_petersen();

// Vertex i adjacent to i +- s (mod n) for each offset s, 1 <= s <= n/2.
// Distinct offsets required; an offset equal to n/2 contributes one edge
// per vertex pair instead of two.
Graph gen_circulant(int n, const std::vector<int>& offsets);

// G(n, p): independent coin per pair, pairs visited in lexicographic order.
Graph gen_gnp(int n, double prob, std::uint64_t seed);

// Random d-regular graph by the pairing model, resampled until simple
// (at most 10^4 attempts). Requires d < n and n*d even.
Graph gen_random_regular(int n, int d, std::uint64_t seed);

}  // namespace alphadom
