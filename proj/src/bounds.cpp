#include "alphadom/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace alphadom {

namespace {

constexpr long double kNegInf = -std::numeric_limits<long double>::infinity();

// 1 - exp(ln d - (1 + 1/d) ln(1 + d) - L/d). caro_roditty is the L = 0 case;
// routing both through here keeps the reduction identities exact to the bit.
long double cr_form(int d, long double log_deg) {
    long double dl = d;
    return 1.0L - std::exp(std::log(dl) - (1.0L + 1.0L / dl) * std::log(1.0L + dl) -
                            log_deg / dl);
}

// (ln(d + 1) + L + 1) / (d + 1)
long double log_form(int d, long double log_deg) {
    long double dl = d;
    return (std::log(dl + 1.0L) + log_deg + 1.0L) / (dl + 1.0L);
}

// Minimizer of p + (1-p)^{d+1} e^{L}: 1 - ((1+d) e^{L})^{-1/d}. Negative only
// when (1+d) e^{L} < 1 (possible with isolated vertices); clamped to [0, 1).
long double optimal_bias(int d, long double log_deg) {
    long double dl = d;
    long double p = 1.0L - std::exp(-(std::log(1.0L + dl) + log_deg) / dl);
    return std::max(p, 0.0L);
}

// min{1, (ln(d+1) + L) / (d+1)}, clamped below at 0.
long double log_rule_bias(int d, long double log_deg) {
    long double dl = d;
    long double p = (std::log(dl + 1.0L) + log_deg) / (dl + 1.0L);
    return std::min(std::max(p, 0.0L), 1.0L);
}

BoundValue na_edgeless() { return BoundValue::na("edgeless graph"); }
BoundValue na_open_zero() { return BoundValue::na("alpha-degree is 0 (gamma_alpha = 0, edgeless)"); }
BoundValue na_closed_zero() { return BoundValue::na("closed alpha-degree is 0 (edgeless)"); }

}  // namespace

BoundInputs BoundInputs::from(const Graph& g, const Alpha& alpha) {
    AlphaDegrees deg = alpha_degrees(g, alpha);
    BoundInputs in{.n = g.n(),
                   .m = g.m(),
                   .delta = g.min_degree(),
                   .Delta = g.max_degree(),
                   .dhat = delta_hat(g, alpha),
                   .log_open = deg.log_open,
                   .log_closed = deg.log_closed,
                   .alpha = alpha};
    return in;
}

BoundInterval dunbar_degree_bounds(const BoundInputs& in) {
    if (in.Delta < 1) return {na_edgeless(), na_edgeless()};
    long double p = in.alpha.num(), q = in.alpha.den();
    long double lower = p * in.delta / (q * in.Delta + p * in.delta);
    long double upper = q * in.Delta / (q * in.Delta + (q - p) * in.delta);
    return {BoundValue::ok(lower), BoundValue::ok(upper)};
}

BoundInterval dunbar_edge_bounds(const BoundInputs& in) {
    if (in.Delta < 1) return {na_edgeless(), na_edgeless()};
    long double p = in.alpha.num(), q = in.alpha.den();
    long double m = in.m, n = in.n, D = in.Delta;
    long double lower = 2.0L * p * m / ((q + p) * D);
    long double upper = ((2.0L * q - p) * D * n - (2.0L * q - 2.0L * p) * m) / ((2.0L * q - p) * D);
    return {BoundValue::ok(lower), BoundValue::ok(upper)};
}

BoundValue caro_roditty(const BoundInputs& in) {
    if (in.delta < 1) return BoundValue::na("needs min degree >= 1");
    return BoundValue::ok(cr_form(in.delta, 0.0L));
}

BoundValue classical_bound(const BoundInputs& in) {
    return BoundValue::ok(log_form(in.delta, 0.0L));
}

BoundValue cr_alpha_bound(const BoundInputs& in) {
    if (in.log_open == kNegInf) return na_open_zero();
    return BoundValue::ok(cr_form(in.dhat, in.log_open));
}

BoundValue cr_rate_bound(const BoundInputs& in) {
    if (in.log_closed == kNegInf) return na_closed_zero();
    return BoundValue::ok(cr_form(in.dhat, in.log_closed));
}

BoundValue log_alpha_bound(const BoundInputs& in) {
    if (in.log_open == kNegInf) return na_open_zero();
    return BoundValue::ok(log_form(in.dhat, in.log_open));
}

BoundValue log_rate_bound(const BoundInputs& in) {
    if (in.log_closed == kNegInf) return na_closed_zero();
    return BoundValue::ok(log_form(in.dhat, in.log_closed));
}

BoundValue optimal_p(const BoundInputs& in) {
    if (in.log_open == kNegInf) return na_open_zero();
    return BoundValue::ok(optimal_bias(in.dhat, in.log_open));
}

BoundValue log_rule_p(const BoundInputs& in) {
    if (in.log_open == kNegInf) return na_open_zero();
    return BoundValue::ok(log_rule_bias(in.dhat, in.log_open));
}

BoundValue optimal_rate_p(const BoundInputs& in) {
    if (in.log_closed == kNegInf) return na_closed_zero();
    return BoundValue::ok(optimal_bias(in.dhat, in.log_closed));
}

BoundValue log_rule_rate_p(const BoundInputs& in) {
    if (in.log_closed == kNegInf) return na_closed_zero();
    return BoundValue::ok(log_rule_bias(in.dhat, in.log_closed));
}

const BoundEntry* BoundReport::find(std::string_view name) const {
    for (const auto& e : entries)
        if (e.name == name) return &e;
    return nullptr;
}

BoundReport bound_report(const Graph& g, const Alpha& alpha) {
    BoundInputs in = BoundInputs::from(g, alpha);
    BoundReport rep;
    rep.n = in.n;
    rep.m = in.m;
    rep.delta = in.delta;
    rep.Delta = in.Delta;
    rep.dhat = in.dhat;
    rep.alpha = alpha.to_string();
    rep.log_open = in.log_open;
    rep.log_closed = in.log_closed;

    using Kind = BoundEntry::Kind;
    auto add_frac = [&](std::string name, Kind kind, const BoundValue& v) {
        rep.entries.push_back({std::move(name), kind, v.value,
                               v.value * static_cast<long double>(in.n), v.applicable, v.note});
    };
    auto add_abs = [&](std::string name, Kind kind, const BoundValue& v) {
        rep.entries.push_back({std::move(name), kind,
                               v.value / static_cast<long double>(in.n), v.value, v.applicable,
                               v.note});
    };
    auto add_prob = [&](std::string name, const BoundValue& v) {
        rep.entries.push_back({std::move(name), Kind::Probability, v.value, v.value,
                               v.applicable, v.note});
    };

    auto deg = dunbar_degree_bounds(in);
    auto edge = dunbar_edge_bounds(in);
    add_frac("dunbar_degree_lower", Kind::Lower, deg.lower);
    add_frac("dunbar_degree_upper", Kind::Upper, deg.upper);
    add_abs("dunbar_edge_lower", Kind::Lower, edge.lower);
    add_abs("dunbar_edge_upper", Kind::Upper, edge.upper);
    add_frac("caro_roditty", Kind::ClassicUpper, caro_roditty(in));
    add_frac("classical", Kind::ClassicUpper, classical_bound(in));
    add_frac("cr_alpha", Kind::Upper, cr_alpha_bound(in));
    add_frac("log_alpha", Kind::Upper, log_alpha_bound(in));
    add_frac("cr_rate", Kind::RateUpper, cr_rate_bound(in));
    add_frac("log_rate", Kind::RateUpper, log_rate_bound(in));
    add_prob("p_cr_alpha", optimal_p(in));
    add_prob("p_log_alpha", log_rule_p(in));
    add_prob("p_cr_rate", optimal_rate_p(in));
    add_prob("p_log_rate", log_rule_rate_p(in));

    long double nd = in.n;
    rep.max_lower = 0;
    rep.min_upper = nd;       // gamma_alpha <= n always
    rep.min_upper_rate = nd;  // gamma_x-alpha <= n always
    for (const auto& e : rep.entries) {
        if (!e.applicable) continue;
        switch (e.kind) {
            case Kind::Lower: rep.max_lower = std::max(rep.max_lower, e.absolute); break;
            case Kind::Upper: rep.min_upper = std::min(rep.min_upper, e.absolute); break;
            case Kind::RateUpper:
                rep.min_upper_rate = std::min(rep.min_upper_rate, e.absolute);
                break;
            default: break;
        }
    }
    return rep;
}

namespace {

std::string fmt_double(long double v, const char* spec) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), spec, static_cast<double>(v));
    return buf;
}

}  // namespace

nlohmann::ordered_json BoundReport::to_json() const {
    nlohmann::ordered_json j;
    j["n"] = n;
    j["m"] = m;
    j["delta"] = delta;
    j["Delta"] = Delta;
    j["alpha"] = alpha;
    j["delta_hat"] = dhat;
    j["log_open_degree"] = static_cast<double>(log_open);
    j["log_closed_degree"] = static_cast<double>(log_closed);
    auto list = nlohmann::ordered_json::object();
    for (const auto& e : entries) {
        nlohmann::ordered_json item;
        if (e.applicable) {
            item["fraction"] = static_cast<double>(e.fraction);
            item["absolute"] = static_cast<double>(e.absolute);
        } else {
            item["applicable"] = false;
            item["note"] = e.note;
        }
        list[e.name] = std::move(item);
    }
    j["bounds"] = std::move(list);
    j["max_lower"] = static_cast<double>(max_lower);
    j["min_upper"] = static_cast<double>(min_upper);
    j["min_upper_rate"] = static_cast<double>(min_upper_rate);
    return j;
}

std::string BoundReport::csv_header() {
    std::string h = "graph,n,m,delta,Delta,alpha,delta_hat,log_open,log_closed";
    const char* names[] = {"dunbar_degree_lower", "dunbar_degree_upper", "dunbar_edge_lower",
                           "dunbar_edge_upper",   "caro_roditty",        "classical",
                           "cr_alpha",            "log_alpha",           "cr_rate",
                           "log_rate",            "p_cr_alpha",          "p_log_alpha",
                           "p_cr_rate",           "p_log_rate"};
    for (const char* s : names) {
        h += ',';
        h += s;
    }
    return h + ",max_lower,min_upper,min_upper_rate";
}

std::string BoundReport::csv_row(std::string_view graph_label) const {
    std::string row(graph_label);
    row += ',' + std::to_string(n) + ',' + std::to_string(m) + ',' + std::to_string(delta) +
           ',' + std::to_string(Delta) + ',' + alpha + ',' + std::to_string(dhat);
    row += ',' + fmt_double(log_open, "%.9f");
    row += ',' + fmt_double(log_closed, "%.9f");
    for (const auto& e : entries)
        row += ',' + (e.applicable ? fmt_double(e.fraction, "%.9f") : std::string("NA"));
    row += ',' + fmt_double(max_lower, "%.6f");
    row += ',' + fmt_double(min_upper, "%.6f");
    row += ',' + fmt_double(min_upper_rate, "%.6f");
    return row;
}

}  // namespace alphadom
