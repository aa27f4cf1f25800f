#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

#include "alphadom/graph.hpp"

namespace alphadom {

using bigint = boost::multiprecision::cpp_int;

// Exact rational in (0, 1], kept in lowest terms. Requirements like
// ceil(alpha * d) are computed purely in integer arithmetic; a floating
// alpha would flip the ceiling near integer products (0.1 * 1000).
class Alpha {
public:
    Alpha(long long num, long long den);

    // Accepts exactly the form "p/q". Decimals are rejected.
    static Alpha parse(std::string_view text);

    long long num() const { return num_; }
    long long den() const { return den_; }

    // ceil(num * d / den) for d >= 0.
    long long ceil_times(long long d) const;

    std::string to_string() const;

    friend bool operator==(const Alpha& a, const Alpha& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator<(const Alpha& a, const Alpha& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }

private:
    long long num_;
    long long den_;
};

// floor(delta * (1 - alpha)) + 1, the effective minimum-degree parameter.
int delta_hat(const Graph& g, const Alpha& alpha);

// Which membership condition a vertex set is checked against.
class Mode {
public:
    enum class Kind { Dom, KDom, KTuple, AlphaDom, AlphaRate };

    static Mode dom() { return Mode(Kind::Dom, 1, std::nullopt); }
    static Mode k_dom(int k);
    static Mode k_tuple(int k);
    static Mode alpha_dom(const Alpha& a) { return Mode(Kind::AlphaDom, 0, a); }
    static Mode alpha_rate(const Alpha& a) { return Mode(Kind::AlphaRate, 0, a); }

    Kind kind() const { return kind_; }
    int k() const { return k_; }
    const Alpha& alpha() const { return *alpha_; }

    // Threshold a vertex of degree d must reach.
    int requirement(int d) const;
    // Closed modes count N[v] for every vertex; open modes count N(v) and
    // waive the requirement for vertices inside the set.
    bool counts_closed() const { return kind_ == Kind::KTuple || kind_ == Kind::AlphaRate; }

    // Throws when the mode is undefined on g (k-tuple needs delta >= k-1).
    void check_defined_on(const Graph& g) const;

    std::string to_string() const;

private:
    Mode(Kind kind, int k, std::optional<Alpha> a) : kind_(kind), k_(k), alpha_(a) {}

    Kind kind_;
    int k_;
    std::optional<Alpha> alpha_;
};

struct Deficiency {
    int required = 0;
    int achieved = 0;
};

// Validity certificate: lists exactly the vertices whose requirement is not met.
struct VerifyReport {
    bool valid = true;
    std::map<int, Deficiency> deficiencies;

    nlohmann::ordered_json to_json() const;
};

// Checks X against the mode's membership condition. Throws on invalid
// vertices in X or an undefined mode; never throws for a merely invalid set.
VerifyReport verify(const Graph& g, const std::vector<int>& x, const Mode& mode);

// Average binomial weights of the graph: open uses C(d_i, ceil(a d_i) - 1),
// closed uses C(d_i + 1, ceil(a d_i) - 1). Stored as natural logs
// (logsumexp accumulation); exact integer sums kept while n <= 64.
struct AlphaDegrees {
    long double log_open = 0;    // ln of the open alpha-degree, -inf when it is 0
    long double log_closed = 0;
    std::optional<bigint> exact_open_times_n;
    std::optional<bigint> exact_closed_times_n;
};

AlphaDegrees alpha_degrees(const Graph& g, const Alpha& alpha);

// ln C(n, k); -inf for k < 0 or k > n.
long double log_binomial(long long n, long long k);

// Exact C(n, k) for the same convention.
bigint binomial_exact(long long n, long long k);

// True when alpha * max_degree <= 1: every requirement collapses to one
// neighbor and the alpha bounds coincide with the classical ones (delta >= 1).
// A sufficient smallness condition, not claimed to be tight.
bool reduces_to_classical(const Graph& g, const Alpha& alpha);

}  // namespace alphadom
