#include "alphadom/construct.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "alphadom/bounds.hpp"
#include "alphadom/rng.hpp"

namespace alphadom {

namespace {

std::vector<int> sample_vertices(const Graph& g, double p, std::mt19937_64& rng) {
    std::vector<int> a;
    for (int v = 0; v < g.n(); ++v)
        if (uniform01(rng) < p) a.push_back(v);
    return a;
}

std::vector<int> sorted_union(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> d;
    d.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(d));
    return d;
}

void check_valid(const Graph& g, const TrialOutcome& out, const Mode& mode) {
    if (!verify(g, out.dominating, mode).valid)
        throw std::logic_error("internal error: construction produced an invalid set for mode " +
                               mode.to_string());
}

}  // namespace

nlohmann::ordered_json TrialOutcome::to_json() const {
    nlohmann::ordered_json j;
    j["size"] = dominating.size();
    j["p_used"] = p_used;
    j["seed"] = seed;
    j["D"] = dominating;
    j["A"] = sampled;
    j["B"] = repaired;
    return j;
}

double construction_bias(const Graph& g, const Alpha& alpha, const ConstructionParams& params,
                         bool rate_mode) {
    if (params.p_override) {
        double p = *params.p_override;
        if (p < 0.0 || p > 1.0) throw std::invalid_argument("p override must be in [0, 1]");
        return p;
    }
    BoundInputs in = BoundInputs::from(g, alpha);
    const bool log_rule = params.p_rule == ConstructionParams::PRule::LogRule;
    BoundValue v = rate_mode ? (log_rule ? log_rule_rate_p(in) : optimal_rate_p(in))
                             : (log_rule ? log_rule_p(in) : optimal_p(in));
    if (!v.applicable)
        throw std::domain_error(
            "alpha-degree is zero (edgeless graph): the empty set is already optimal");
    return static_cast<double>(v.value);
}

TrialOutcome construct_alpha(const Graph& g, const Alpha& alpha, const ConstructionParams& params,
                             int trial_index) {
    TrialOutcome out;
    out.p_used = construction_bias(g, alpha, params, false);
    out.seed = derive_seed(params.master_seed, static_cast<std::uint64_t>(trial_index));
    std::mt19937_64 rng(out.seed);
    out.sampled = sample_vertices(g, out.p_used, rng);

    std::vector<char> in_a(g.n(), 0);
    for (int v : out.sampled) in_a[v] = 1;
    for (int v = 0; v < g.n(); ++v) {
        if (in_a[v]) continue;
        int have = 0;
        for (int w : g.neighbors(v)) have += in_a[w];
        if (have < alpha.ceil_times(g.degree(v))) out.repaired.push_back(v);
    }
    out.dominating = sorted_union(out.sampled, out.repaired);
    check_valid(g, out, Mode::alpha_dom(alpha));
    return out;
}

TrialOutcome construct_alpha_rate(const Graph& g, const Alpha& alpha,
                                  const ConstructionParams& params, int trial_index,
                                  RateRepair repair) {
    TrialOutcome out;
    out.p_used = construction_bias(g, alpha, params, true);
    out.seed = derive_seed(params.master_seed, static_cast<std::uint64_t>(trial_index));
    std::mt19937_64 rng(out.seed);
    out.sampled = sample_vertices(g, out.p_used, rng);

    const int n = g.n();
    std::vector<char> in_a(n, 0), in_b(n, 0);
    for (int v : out.sampled) in_a[v] = 1;
    const bool greedy = repair == RateRepair::Greedy;

    for (int v = 0; v < n; ++v) {
        // closed-neighborhood count; the proof-faithful variant measures
        // deficits against A only, the greedy one against the growing A u B
        auto counted = [&](int w) { return in_a[w] || (greedy && in_b[w]); };
        long long have = counted(v) ? 1 : 0;
        for (int w : g.neighbors(v)) have += counted(w) ? 1 : 0;
        long long need = alpha.ceil_times(g.degree(v)) - have;
        if (need <= 0) continue;

        // candidates: neighbors outside A (greedy: also outside B), ascending
        std::vector<int> fresh;
        long long reused = 0;
        for (int w : g.neighbors(v)) {
            if (in_a[w]) continue;
            if (in_b[w]) {
                if (!greedy && reused < need) ++reused;  // prefer existing B vertices
            } else {
                fresh.push_back(w);
            }
        }
        long long to_add = need - reused;
        if (to_add > static_cast<long long>(fresh.size()))
            throw std::logic_error("internal error: rate repair ran out of candidates at vertex " +
                                   std::to_string(v));
        for (long long i = 0; i < to_add; ++i) {
            in_b[fresh[i]] = 1;
            out.repaired.push_back(fresh[i]);
        }
    }
    std::sort(out.repaired.begin(), out.repaired.end());
    out.dominating = sorted_union(out.sampled, out.repaired);
    check_valid(g, out, Mode::alpha_rate(alpha));
    return out;
}

TrialOutcome best_of_trials(const Graph& g, const Mode& mode, const ConstructionParams& params,
                            RateRepair repair) {
    if (mode.kind() != Mode::Kind::AlphaDom && mode.kind() != Mode::Kind::AlphaRate)
        throw std::invalid_argument("best_of_trials needs an alpha or rate mode");
    if (params.trials < 1) throw std::invalid_argument("trials must be >= 1");

    const bool rate = mode.kind() == Mode::Kind::AlphaRate;
    std::optional<TrialOutcome> best;
    for (int t = 0; t < params.trials; ++t) {
        TrialOutcome out = rate ? construct_alpha_rate(g, mode.alpha(), params, t, repair)
                                : construct_alpha(g, mode.alpha(), params, t);
        if (!best || out.size() < best->size()) best = std::move(out);
    }
    return *best;
}

namespace {

// P(Binomial(u, p) <= c), iterated in long double.
long double binom_cdf(int u, int c, long double p) {
    if (c < 0) return 0.0L;
    if (c >= u) return 1.0L;
    if (p <= 0.0L) return 1.0L;  // zero successes
    if (p >= 1.0L) return 0.0L;  // u successes, and u > c here
    const long double q = 1.0L - p;
    long double term = std::pow(q, u);
    long double sum = term;
    for (int r = 0; r < c; ++r) {
        term *= static_cast<long double>(u - r) / static_cast<long double>(r + 1) * (p / q);
        sum += term;
    }
    return std::min(sum, 1.0L);
}

}  // namespace

std::vector<int> derandomize_alpha(const Graph& g, const Alpha& alpha) {
    BoundInputs in = BoundInputs::from(g, alpha);
    BoundValue bias = optimal_p(in);
    if (!bias.applicable) return {};  // edgeless: the empty set is optimal

    const long double p = bias.value;
    const long double q = 1.0L - p;
    const int n = g.n();

    enum : char { kUndecided, kIn, kOut };
    std::vector<char> state(n, kUndecided);
    std::vector<int> requirement(n), in_a_nbrs(n, 0), undecided_nbrs(n);
    for (int v = 0; v < n; ++v) {
        requirement[v] = static_cast<int>(alpha.ceil_times(g.degree(v)));
        undecided_nbrs[v] = g.degree(v);
    }

    // The conditional expectation of |A| + |B| is
    //   |A_decided| + p * #undecided + sum_v ownf(v) * P(deficient | decisions)
    // with ownf = 0 / 1 / q for in / out / undecided, and the deficiency
    // probability a binomial cdf over the still-undecided neighbors. Fixing a
    // vertex shifts only its own term, its neighbors' terms and the |A| part;
    // the two branch deltas average to zero, so taking the smaller one never
    // increases the expectation.
    for (int v = 0; v < n; ++v) {
        long double own = binom_cdf(undecided_nbrs[v], requirement[v] - 1 - in_a_nbrs[v], p);
        long double delta_in = (1.0L - p) - q * own;
        long double delta_out = -p + p * own;
        for (int w : g.neighbors(v)) {
            long double ownf = state[w] == kIn ? 0.0L : state[w] == kOut ? 1.0L : q;
            if (ownf == 0.0L) continue;
            const int c = requirement[w] - 1 - in_a_nbrs[w];
            const int u = undecided_nbrs[w];
            const long double cur = binom_cdf(u, c, p);
            delta_in += ownf * (binom_cdf(u - 1, c - 1, p) - cur);
            delta_out += ownf * (binom_cdf(u - 1, c, p) - cur);
        }
        const bool take = delta_in < delta_out;  // tie: stay out of A
        state[v] = take ? kIn : kOut;
        for (int w : g.neighbors(v)) {
            --undecided_nbrs[w];
            if (take) ++in_a_nbrs[w];
        }
    }

    std::vector<int> dominating;
    for (int v = 0; v < n; ++v)
        if (state[v] == kIn || in_a_nbrs[v] < requirement[v]) dominating.push_back(v);
    if (!verify(g, dominating, Mode::alpha_dom(alpha)).valid)
        throw std::logic_error("internal error: derandomization produced an invalid set");
    return dominating;
}

}  // namespace alphadom
