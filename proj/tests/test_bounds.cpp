#include <doctest.h>

#include <cmath>

#include "alphadom/bounds.hpp"
#include "alphadom/exact.hpp"
#include "support.hpp"

using namespace alphadom;

namespace {

double rel_err(long double got, long double want) {
    return static_cast<double>(std::fabs(got - want) / std::fabs(want));
}

BoundInputs inputs_for(const Graph& g, long long p, long long q) {
    return BoundInputs::from(g, Alpha(p, q));
}

}  // namespace

TEST_CASE("dunbar degree bounds") {
    // delta = Delta = 1000, alpha = 1/10 (inputs assembled directly)
    BoundInputs in;
    in.n = 2001;
    in.m = 2001LL * 500;
    in.delta = in.Delta = 1000;
    in.dhat = 901;
    in.alpha = Alpha(1, 10);
    auto deg = dunbar_degree_bounds(in);
    CHECK(rel_err(deg.upper.value, 1000.0L / 1900.0L) < 1e-15);
    CHECK(rel_err(deg.lower.value, 100.0L / 1100.0L) < 1e-15);
    CHECK(deg.upper.value < 0.527L);

    auto k2 = dunbar_degree_bounds(inputs_for(gen_path(2), 1, 1));
    CHECK(rel_err(k2.lower.value, 0.5L) < 1e-15);
    CHECK(rel_err(k2.upper.value, 1.0L) < 1e-15);

    auto edgeless = dunbar_degree_bounds(inputs_for(parse_edge_list("n 3\n"), 1, 2));
    CHECK_FALSE(edgeless.lower.applicable);
    CHECK_FALSE(edgeless.upper.applicable);
}

TEST_CASE("dunbar edge bounds on C5 and K4") {
    auto c5 = dunbar_edge_bounds(inputs_for(gen_cycle(5), 1, 2));
    CHECK(rel_err(c5.lower.value, 5.0L / 3.0L) < 1e-15);   // 2*(1/2)*5 / ((3/2)*2)
    CHECK(rel_err(c5.upper.value, 10.0L / 3.0L) < 1e-15);  // ((3/2)*2*5 - 5) / 3

    auto k4 = dunbar_edge_bounds(inputs_for(gen_complete(4), 1, 1));
    CHECK(rel_err(k4.lower.value, 2.0L) < 1e-15);  // 2*6 / (2*3)
}

TEST_CASE("caro-roditty and classical closed forms") {
    BoundInputs in;
    in.delta = 1;
    CHECK(rel_err(caro_roditty(in).value, 0.75L) < 1e-15);
    CHECK(rel_err(classical_bound(in).value, 0.8465735902799726547L) < 1e-12);
    in.delta = 2;
    CHECK(rel_err(caro_roditty(in).value, 0.6150998205402494903L) < 1e-12);
    in.delta = 1000;
    CHECK(rel_err(classical_bound(in).value, 0.0079008539253898308L) < 1e-12);
    in.delta = 0;
    CHECK_FALSE(caro_roditty(in).applicable);
    CHECK(rel_err(classical_bound(in).value, 1.0L) < 1e-15);  // ln 1 + 1
}

TEST_CASE("caro-roditty-form alpha bound: paper instance and small cases") {
    // 1000-regular, alpha = 1/10: frozen arbitrary-precision oracle values
    const long double kThm2 = 0.3047655262683827294L;
    const long double kOptP = 0.3039939008813332097L;
    const long double kCor1 = 0.3631037326848192348L;
    const long double kThm3 = 0.3048458788924488816L;
    const long double kCor2 = 0.3632191875176935108L;

    Graph g = gen_circulant(2001, [] {
        std::vector<int> s(500);
        for (int i = 0; i < 500; ++i) s[i] = i + 1;
        return s;
    }());
    BoundInputs in = BoundInputs::from(g, Alpha(1, 10));
    CHECK(in.dhat == 901);
    CHECK(rel_err(cr_alpha_bound(in).value, kThm2) < 1e-9);
    CHECK(cr_alpha_bound(in).value < 0.305L);
    CHECK(cr_alpha_bound(in).value > 0.30L);
    // on this instance the new form beats the degree bound by a wide margin
    // (not asserted as a general theorem)
    CHECK(cr_alpha_bound(in).value < dunbar_degree_bounds(in).upper.value);
    CHECK(rel_err(optimal_p(in).value, kOptP) < 1e-9);
    CHECK(rel_err(log_alpha_bound(in).value, kCor1) < 1e-9);
    CHECK(rel_err(cr_rate_bound(in).value, kThm3) < 1e-9);
    CHECK(rel_err(log_rate_bound(in).value, kCor2) < 1e-9);

    // C5 at alpha = 1/2: dhat = 2, open degree 1, coincides with caro_roditty
    BoundInputs c5 = inputs_for(gen_cycle(5), 1, 2);
    CHECK(rel_err(cr_alpha_bound(c5).value, 0.6150998205402494903L) < 1e-12);
    CHECK(rel_err(optimal_p(c5).value, 0.4226497308103742355L) < 1e-12);
    CHECK(rel_err(cr_rate_bound(c5).value, 0.6150998205402494903L) < 1e-12);

    // K4 at alpha = 1: dhat = 1, closed degree 6 -> 1 - 1/24
    BoundInputs k4 = inputs_for(gen_complete(4), 1, 1);
    CHECK(rel_err(cr_rate_bound(k4).value, 23.0L / 24.0L) < 1e-12);
    CHECK(rel_err(cr_alpha_bound(k4).value, 11.0L / 12.0L) < 1e-12);

    // dhat = 1, open degree 1 -> optimal bias 1/2, log bound (ln 2 + 1)/2
    BoundInputs tiny = inputs_for(gen_path(2), 1, 1);
    CHECK(rel_err(optimal_p(tiny).value, 0.5L) < 1e-12);
    CHECK(rel_err(log_alpha_bound(tiny).value, 0.8465735902799726547L) < 1e-12);
}

TEST_CASE("edgeless graphs flag inapplicable instead of throwing") {
    Graph empty = parse_edge_list("n 5\n");
    BoundInputs in = inputs_for(empty, 1, 2);
    CHECK_FALSE(cr_alpha_bound(in).applicable);
    CHECK_FALSE(cr_rate_bound(in).applicable);
    CHECK_FALSE(optimal_p(in).applicable);
    CHECK_FALSE(log_rule_p(in).applicable);
    CHECK(cr_alpha_bound(in).note.find("gamma_alpha = 0") != std::string::npos);

    BoundReport rep = bound_report(empty, Alpha(1, 2));  // must still render
    CHECK(rep.find("cr_alpha") != nullptr);
    CHECK_FALSE(rep.find("cr_alpha")->applicable);
    CHECK(rep.max_lower == 0);
    CHECK(rep.min_upper == 5);  // trivial n only
}

TEST_CASE("reduction identities at alpha <= 1/(Delta+1)") {
    int checked = 0;
    for (int seed = 1; checked < 20; ++seed) {
        Graph g = gen_gnp(40, 0.2, seed);
        if (g.min_degree() < 1) continue;
        ++checked;
        Alpha a(1, g.max_degree() + 1);
        BoundInputs in = BoundInputs::from(g, a);
        CHECK(in.dhat == g.min_degree());
        CHECK(rel_err(cr_alpha_bound(in).value, caro_roditty(in).value) < 1e-12);
        CHECK(rel_err(log_alpha_bound(in).value, classical_bound(in).value) < 1e-12);
        CHECK(rel_err(log_rate_bound(in).value, classical_bound(in).value) < 1e-12);
    }
}

TEST_CASE("rate bound dominates the open bound") {
    // C(d+1, k) >= C(d, k) entrywise, so the closed-degree form is never smaller
    for (int seed = 0; seed < 15; ++seed) {
        Graph g = gen_gnp(30, 0.25, 300 + seed);
        for (auto a : {Alpha(1, 4), Alpha(1, 2), Alpha(3, 4), Alpha(1, 1)}) {
            BoundInputs in = BoundInputs::from(g, a);
            auto open = cr_alpha_bound(in);
            auto rate = cr_rate_bound(in);
            if (open.applicable && rate.applicable)
                CHECK(rate.value >= open.value - 1e-15L);
        }
    }
}

TEST_CASE("bound values are monotone in alpha on the fixed corpus") {
    // per-instance regression, not a theorem: catches sign errors
    const Alpha grid[] = {Alpha(1, 10), Alpha(1, 4), Alpha(1, 2), Alpha(3, 4), Alpha(1, 1)};
    for (const auto& g : {gen_cycle(5), gen_complete(4), gen_petersen(),
                          gen_circulant(12, {1, 2, 3})}) {
        long double prev_open = 0, prev_rate = 0;
        for (const Alpha& a : grid) {
            BoundInputs in = BoundInputs::from(g, a);
            long double open = cr_alpha_bound(in).value;
            long double rate = cr_rate_bound(in).value;
            CHECK(open >= prev_open - 1e-15L);
            CHECK(rate >= prev_rate - 1e-15L);
            CHECK(open >= 0.0L);
            CHECK(open <= 1.0L);
            CHECK(rate <= 1.0L);
            prev_open = open;
            prev_rate = rate;
        }
    }
}

TEST_CASE("report sandwich against exact values on small graphs") {
    // acceptance covers the exhaustive n <= 7 corpus; spot-check n <= 16 here
    std::vector<Graph> graphs = {gen_cycle(5),  gen_petersen(), gen_complete(4),
                                 gen_path(7),   gen_cycle(9),   gen_gnp(12, 0.3, 5),
                                 gen_gnp(14, 0.4, 3)};
    for (const auto& g : graphs) {
        for (auto a : {Alpha(1, 10), Alpha(1, 4), Alpha(1, 2), Alpha(3, 4), Alpha(1, 1)}) {
            BoundReport rep = bound_report(g, a);
            int gamma_a = exact_number(g, Mode::alpha_dom(a)).value;
            int gamma_r = exact_number(g, Mode::alpha_rate(a)).value;
            CHECK(std::ceil(static_cast<double>(rep.max_lower) - 1e-9) <= gamma_a);
            CHECK(gamma_a <= std::floor(static_cast<double>(rep.min_upper) + 1e-9));
            CHECK(gamma_a <= gamma_r);
            CHECK(gamma_r <= std::floor(static_cast<double>(rep.min_upper_rate) + 1e-9));
        }
    }
}

TEST_CASE("csv and json rendering is stable") {
    BoundReport rep = bound_report(gen_cycle(5), Alpha(1, 2));
    std::string header = BoundReport::csv_header();
    std::string row = rep.csv_row("cycle:5");
    CHECK(std::count(header.begin(), header.end(), ',') ==
          std::count(row.begin(), row.end(), ','));
    CHECK(row.substr(0, 8) == "cycle:5,");
    CHECK(row == bound_report(gen_cycle(5), Alpha(1, 2)).csv_row("cycle:5"));

    auto j = rep.to_json();
    CHECK(j["delta_hat"] == 2);
    CHECK(j["bounds"]["cr_alpha"]["fraction"].get<double>() ==
          doctest::Approx(0.61509982).epsilon(1e-8));
}
