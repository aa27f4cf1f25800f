#include "alphadom/domination.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <numeric>

namespace alphadom {

namespace {
constexpr long double kNegInf = -std::numeric_limits<long double>::infinity();
constexpr long long kMaxRational = 1000000000LL;
}  // namespace

Alpha::Alpha(long long num, long long den) : num_(num), den_(den) {
    if (num <= 0 || den <= 0 || num > den)
        throw std::invalid_argument("alpha must satisfy 0 < p/q <= 1");
    if (num > kMaxRational || den > kMaxRational)
        throw std::invalid_argument("alpha numerator/denominator too large");
    long long g = std::gcd(num_, den_);
    num_ /= g;
    den_ /= g;
}

Alpha Alpha::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        throw std::invalid_argument("alpha must be a rational 'p/q' (e.g. 1/2), got '" +
                                    std::string(text) + "'");
    auto read = [&](std::string_view tok) {
        long long value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc{} || ptr != tok.data() + tok.size())
            throw std::invalid_argument("alpha must be a rational 'p/q', got '" +
                                        std::string(text) + "'");
        return value;
    };
    return Alpha(read(text.substr(0, slash)), read(text.substr(slash + 1)));
}

long long Alpha::ceil_times(long long d) const {
    if (d < 0) throw std::invalid_argument("ceil_times needs d >= 0");
    return (num_ * d + den_ - 1) / den_;
}

std::string Alpha::to_string() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
}

int delta_hat(const Graph& g, const Alpha& alpha) {
    long long delta = g.min_degree();
    return static_cast<int>(delta * (alpha.den() - alpha.num()) / alpha.den() + 1);
}

Mode Mode::k_dom(int k) {
    if (k < 1) throw std::invalid_argument("k-domination needs k >= 1");
    return Mode(Kind::KDom, k, std::nullopt);
}

Mode Mode::k_tuple(int k) {
    if (k < 1) throw std::invalid_argument("k-tuple domination needs k >= 1");
    return Mode(Kind::KTuple, k, std::nullopt);
}

int Mode::requirement(int d) const {
    switch (kind_) {
        case Kind::Dom: return 1;
        case Kind::KDom:
        case Kind::KTuple: return k_;
        case Kind::AlphaDom:
        case Kind::AlphaRate: return static_cast<int>(alpha_->ceil_times(d));
    }
    return 0;
}

void Mode::check_defined_on(const Graph& g) const {
    if (kind_ == Kind::KTuple && g.min_degree() < k_ - 1)
        throw std::invalid_argument("k-tuple mode undefined: needs min degree >= " +
                                    std::to_string(k_ - 1) + ", graph has " +
                                    std::to_string(g.min_degree()));
}

std::string Mode::to_string() const {
    switch (kind_) {
        case Kind::Dom: return "dom";
        case Kind::KDom: return "kdom(" + std::to_string(k_) + ")";
        case Kind::KTuple: return "tuple(" + std::to_string(k_) + ")";
        case Kind::AlphaDom: return "alpha(" + alpha_->to_string() + ")";
        case Kind::AlphaRate: return "rate(" + alpha_->to_string() + ")";
    }
    return "?";
}

nlohmann::ordered_json VerifyReport::to_json() const {
    nlohmann::ordered_json j;
    j["valid"] = valid;
    auto defs = nlohmann::ordered_json::object();
    for (const auto& [v, d] : deficiencies)
        defs[std::to_string(v)] = {{"required", d.required}, {"achieved", d.achieved}};
    j["deficiencies"] = std::move(defs);
    return j;
}

VerifyReport verify(const Graph& g, const std::vector<int>& x, const Mode& mode) {
    mode.check_defined_on(g);
    std::vector<char> in_set(g.n(), 0);
    for (int v : x) {
        if (v < 0 || v >= g.n())
            throw std::invalid_argument("set contains invalid vertex " + std::to_string(v));
        in_set[v] = 1;
    }
    const bool closed = mode.counts_closed();
    VerifyReport report;
    for (int v = 0; v < g.n(); ++v) {
        if (!closed && in_set[v]) continue;
        int required = mode.requirement(g.degree(v));
        if (required == 0) continue;
        int achieved = closed && in_set[v] ? 1 : 0;
        for (int w : g.neighbors(v)) achieved += in_set[w];
        if (achieved < required) {
            report.valid = false;
            report.deficiencies[v] = {required, achieved};
        }
    }
    return report;
}

long double log_binomial(long long n, long long k) {
    if (k < 0 || k > n) return kNegInf;
    return std::lgamma(static_cast<long double>(n + 1)) -
           std::lgamma(static_cast<long double>(k + 1)) -
           std::lgamma(static_cast<long double>(n - k + 1));
}

bigint binomial_exact(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    bigint r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

namespace {

// Logsumexp over the finite terms, then minus ln(n). When all terms vanish
// the result is the -inf sentinel.
long double log_mean(const std::vector<long double>& terms, int n) {
    long double top = kNegInf;
    for (long double t : terms) top = std::max(top, t);
    if (top == kNegInf) return kNegInf;
    long double sum = 0;
    for (long double t : terms)
        if (t != kNegInf) sum += std::exp(t - top);
    return top + std::log(sum) - std::log(static_cast<long double>(n));
}

}  // namespace

AlphaDegrees alpha_degrees(const Graph& g, const Alpha& alpha) {
    const int n = g.n();
    std::vector<long double> open, closed;
    open.reserve(n);
    closed.reserve(n);
    bigint exact_open = 0, exact_closed = 0;
    const bool keep_exact = n <= 64;

    for (int v = 0; v < n; ++v) {
        int d = g.degree(v);
        long long k = alpha.ceil_times(d) - 1;  // C(d, -1) = 0 for isolated vertices
        open.push_back(log_binomial(d, k));
        closed.push_back(log_binomial(d + 1, k));
        if (keep_exact) {
            exact_open += binomial_exact(d, k);
            exact_closed += binomial_exact(d + 1, k);
        }
    }

    AlphaDegrees out;
    out.log_open = log_mean(open, n);
    out.log_closed = log_mean(closed, n);
    if (keep_exact) {
        out.exact_open_times_n = std::move(exact_open);
        out.exact_closed_times_n = std::move(exact_closed);
    }
    return out;
}

bool reduces_to_classical(const Graph& g, const Alpha& alpha) {
    return alpha.num() * g.max_degree() <= alpha.den();
}

}  // namespace alphadom
