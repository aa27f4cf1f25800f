#include "alphadom/exact.hpp"

#include <algorithm>

namespace alphadom {

namespace {

long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

class SubsetSearch {
public:
    SubsetSearch(const Graph& g, const Mode& mode)
        : g_(g), n_(g.n()), closed_(mode.counts_closed()) {
        req_.resize(n_);
        for (int v = 0; v < n_; ++v) req_[v] = mode.requirement(g.degree(v));
        // suffix_[v][i] = how many members of the relevant neighborhood of v
        // have index >= i (candidates still selectable at position i)
        suffix_.assign(n_, std::vector<int>(n_ + 1, 0));
        for (int v = 0; v < n_; ++v)
            for (int i = n_ - 1; i >= 0; --i) {
                bool relevant = g.has_edge(v, i) || (closed_ && i == v);
                suffix_[v][i] = suffix_[v][i + 1] + (relevant ? 1 : 0);
            }
        cnt_.assign(n_, 0);
        in_set_.assign(n_, 0);
    }

    bool find(int k) { return dfs(0, k); }
    const std::vector<int>& witness() const { return chosen_; }
    std::uint64_t nodes() const { return nodes_; }

private:
    bool satisfied_all() const {
        for (int v = 0; v < n_; ++v) {
            if (!closed_ && in_set_[v]) continue;
            if (cnt_[v] < req_[v]) return false;
        }
        return true;
    }

    // Optimistic per-vertex check: prune only when no completion with the
    // remaining slots can satisfy some vertex.
    bool feasible(int start, int slots) const {
        for (int v = 0; v < n_; ++v) {
            if (!closed_) {
                if (in_set_[v]) continue;
                if (v >= start) continue;  // picking v itself waives it
            }
            if (cnt_[v] + std::min(slots, suffix_[v][start]) < req_[v]) return false;
        }
        return true;
    }

    void take(int u) {
        in_set_[u] = 1;
        chosen_.push_back(u);
        for (int w : g_.neighbors(u)) ++cnt_[w];
        if (closed_) ++cnt_[u];
    }

    void drop(int u) {
        in_set_[u] = 0;
        chosen_.pop_back();
        for (int w : g_.neighbors(u)) --cnt_[w];
        if (closed_) --cnt_[u];
    }

    bool dfs(int start, int slots) {
        ++nodes_;
        if (slots == 0) return satisfied_all();
        if (!feasible(start, slots)) return false;
        for (int u = start; u <= n_ - slots; ++u) {
            take(u);
            if (dfs(u + 1, slots - 1)) return true;
            drop(u);
        }
        return false;
    }

    const Graph& g_;
    int n_;
    bool closed_;
    std::vector<int> req_;
    std::vector<std::vector<int>> suffix_;
    std::vector<int> cnt_;
    std::vector<char> in_set_;
    std::vector<int> chosen_;
    std::uint64_t nodes_ = 0;
};

}  // namespace

int exact_lower_bound(const Graph& g, const Mode& mode) {
    const long long n = g.n();
    const long long Delta = g.max_degree();
    const long long delta = g.min_degree();
    const long long m = g.m();

    switch (mode.kind()) {
        case Mode::Kind::Dom:
            return static_cast<int>(ceil_div(n, Delta + 1));
        case Mode::Kind::KDom:
            return static_cast<int>(
                std::max(ceil_div(n, Delta + 1), std::min<long long>(mode.k(), n)));
        case Mode::Kind::KTuple:
            return static_cast<int>(
                std::max<long long>(mode.k(), ceil_div(mode.k() * n, Delta + 1)));
        case Mode::Kind::AlphaDom:
        case Mode::Kind::AlphaRate: {
            if (Delta < 1) return 0;  // edgeless: the empty set works
            const long long p = mode.alpha().num();
            const long long q = mode.alpha().den();
            long long floor_val = std::max(ceil_div(p * delta * n, q * Delta + p * delta),
                                           ceil_div(2 * p * m, (q + p) * Delta));
            if (mode.kind() == Mode::Kind::AlphaRate)
                // |N[v] n X| <= |X| forces |X| >= max_v ceil(alpha d_v)
                floor_val = std::max(floor_val, mode.alpha().ceil_times(Delta));
            return static_cast<int>(floor_val);
        }
    }
    return 0;
}

ExactResult exact_number(const Graph& g, const Mode& mode) {
    mode.check_defined_on(g);
    if (g.n() > kMaxExactVertices)
        throw std::invalid_argument("exact solver is capped at n <= " +
                                    std::to_string(kMaxExactVertices) + ", got n = " +
                                    std::to_string(g.n()));

    SubsetSearch search(g, mode);
    int floor_k = std::clamp(exact_lower_bound(g, mode), 0, g.n());
    for (int k = floor_k; k <= g.n(); ++k) {
        if (search.find(k))
            return {k, search.witness(), mode, search.nodes()};
    }
    // unreachable: X = V(G) always satisfies every defined mode
    throw std::logic_error("internal error: exhaustive search found no dominating set");
}

nlohmann::ordered_json ExactResult::to_json() const {
    nlohmann::ordered_json j;
    j["mode"] = mode.to_string();
    j["value"] = value;
    j["witness"] = witness;
    j["nodes_explored"] = nodes_explored;
    return j;
}

}  // namespace alphadom
