#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <json.hpp>

#include "alphadom/domination.hpp"
#include "alphadom/graph.hpp"

namespace alphadom {

// Default master seed used by the CLI when none is given.
inline constexpr std::uint64_t kDefaultSeed = 271828;

struct ConstructionParams {
    // Bias rule when p_override is absent: the estimator minimizer or the
    // min{1, (ln(dhat+1) + ln degree) / (dhat+1)} rule.
    enum class PRule { Optimal, LogRule };

    int trials = 1;
    std::uint64_t master_seed = kDefaultSeed;
    std::optional<double> p_override;
    PRule p_rule = PRule::Optimal;
};

// One constructed set with its decomposition: A is the random sample,
// B the deficiency repairs, D = A u B. Always verified before being returned.
struct TrialOutcome {
    std::vector<int> dominating;  // D, sorted
    std::vector<int> sampled;     // A, sorted
    std::vector<int> repaired;    // B, sorted
    double p_used = 0;
    std::uint64_t seed = 0;  // per-trial derived seed

    std::size_t size() const { return dominating.size(); }
    nlohmann::ordered_json to_json() const;
};

// How the rate construction picks repair vertices. ProofOrder computes each
// vertex's deficit against A only (additions to B never shrink another
// vertex's prescribed count), which is what the expectation bound analyzes.
// Greedy recomputes deficits against the growing A u B; usually smaller,
// but carries no bound guarantee.
enum class RateRepair { ProofOrder, Greedy };

// Resolves the sampling bias for a construction (rate selects the closed
// alpha-degree). Throws std::domain_error when the alpha-degree is zero and
// no override is given: the graph is edgeless and the empty set is optimal.
double construction_bias(const Graph& g, const Alpha& alpha, const ConstructionParams& params,
                         bool rate_mode);

// Sample A with an independent coin of bias p per vertex in ascending order,
// then put every vertex outside A that misses its requirement into B.
TrialOutcome construct_alpha(const Graph& g, const Alpha& alpha, const ConstructionParams& params,
                             int trial_index);

// Sample A the same way; every vertex v with |N[v] n A| = m < ceil(alpha d_v)
// gets ceil(alpha d_v) - m of its non-A neighbors added to B, preferring
// neighbors already in B, then lowest index.
TrialOutcome construct_alpha_rate(const Graph& g, const Alpha& alpha,
                                  const ConstructionParams& params, int trial_index,
                                  RateRepair repair = RateRepair::ProofOrder);

// Minimum-size outcome over params.trials independent trials; ties broken by
// lowest trial index. mode must be alpha_dom or alpha_rate.
TrialOutcome best_of_trials(const Graph& g, const Mode& mode, const ConstructionParams& params,
                            RateRepair repair = RateRepair::ProofOrder);

// Deterministic construction by the method of conditional expectations:
// processes vertices in ascending order and fixes each one to the choice
// that does not increase the exact conditional expectation of |A| + |B|
// at the optimal bias. The result always verifies and its size never
// exceeds the Caro-Roditty-form upper bound times n.
std::vector<int> derandomize_alpha(const Graph& g, const Alpha& alpha);

}  // namespace alphadom
