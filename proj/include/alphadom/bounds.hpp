#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "alphadom/domination.hpp"
#include "alphadom/graph.hpp"

namespace alphadom {

// Everything a bound formula needs, precomputed once per (graph, alpha).
// The alpha-degrees enter only through their logs so C(1000, 99)-scale
// inputs cannot overflow.
struct BoundInputs {
    long long n = 1;
    long long m = 0;
    int delta = 0;      // minimum degree
    int Delta = 0;      // maximum degree
    int dhat = 1;       // floor(delta (1 - alpha)) + 1
    long double log_open = 0;
    long double log_closed = 0;
    Alpha alpha{1, 1};

    static BoundInputs from(const Graph& g, const Alpha& alpha);
};

// A single evaluated bound. Inapplicability is data, not an exception.
struct BoundValue {
    long double value = 0;  // fraction of n unless the operation says absolute
    bool applicable = false;
    std::string note;

    static BoundValue ok(long double v) { return {v, true, {}}; }
    static BoundValue na(std::string why) { return {0, false, std::move(why)}; }
};

struct BoundInterval {
    BoundValue lower, upper;
};

// Degree form: alpha delta n / (Delta + alpha delta) <= gamma_alpha <=
// Delta n / (Delta + (1-alpha) delta). Fractions of n.
BoundInterval dunbar_degree_bounds(const BoundInputs& in);

// Edge form: 2 alpha m / ((1+alpha) Delta) <= gamma_alpha <=
// ((2-alpha) Delta n - (2-2alpha) m) / ((2-alpha) Delta). Absolute counts.
BoundInterval dunbar_edge_bounds(const BoundInputs& in);

// 1 - delta / (1+delta)^{1+1/delta}, the Caro-Roditty bound on gamma.
BoundValue caro_roditty(const BoundInputs& in);

// (ln(delta+1) + 1) / (delta+1), the classical bound on gamma.
BoundValue classical_bound(const BoundInputs& in);

// Generalized Caro-Roditty form for gamma_alpha (open alpha-degree) and
// gamma_x-alpha (closed alpha-degree).
BoundValue cr_alpha_bound(const BoundInputs& in);
BoundValue cr_rate_bound(const BoundInputs& in);

// Logarithmic form generalizing the classical bound.
BoundValue log_alpha_bound(const BoundInputs& in);
BoundValue log_rate_bound(const BoundInputs& in);

// Sampling biases: the minimizer of the Caro-Roditty-form estimator
// (clamped into [0, 1)) and the min{1, .} rule of the logarithmic form.
BoundValue optimal_p(const BoundInputs& in);
BoundValue log_rule_p(const BoundInputs& in);
BoundValue optimal_rate_p(const BoundInputs& in);
BoundValue log_rule_rate_p(const BoundInputs& in);

struct BoundEntry {
    // lower / upper bound gamma_alpha; upper bound gamma_x-alpha;
    // bound on plain gamma (reported, never aggregated); sampling bias.
    enum class Kind { Lower, Upper, RateUpper, ClassicUpper, Probability };

    std::string name;
    Kind kind;
    long double fraction = 0;  // of n
    long double absolute = 0;
    bool applicable = false;
    std::string note;
};

// Aggregated report of every bound with applicability flags. Renders for
// every graph, including edgeless ones.
struct BoundReport {
    long long n = 1;
    long long m = 0;
    int delta = 0;
    int Delta = 0;
    int dhat = 1;
    std::string alpha;
    long double log_open = 0;
    long double log_closed = 0;
    std::vector<BoundEntry> entries;
    long double max_lower = 0;       // absolute, over applicable lower bounds (>= 0)
    long double min_upper = 0;       // absolute, over gamma_alpha uppers (<= n)
    long double min_upper_rate = 0;  // absolute, over gamma_x-alpha uppers (<= n)

    const BoundEntry* find(std::string_view name) const;

    nlohmann::ordered_json to_json() const;
    static std::string csv_header();
    std::string csv_row(std::string_view graph_label) const;
};

BoundReport bound_report(const Graph& g, const Alpha& alpha);

}  // namespace alphadom
