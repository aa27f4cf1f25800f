#include <doctest.h>

#include <cmath>

#include "alphadom/bounds.hpp"
#include "alphadom/construct.hpp"
#include "alphadom/exact.hpp"
#include "alphadom/graph.hpp"

using namespace alphadom;

namespace {

ConstructionParams with_p(double p) {
    ConstructionParams params;
    params.p_override = p;
    return params;
}

std::vector<Graph> trial_corpus() {
    return {
        gen_cycle(5),
        gen_path(6),
        gen_complete(4),
        gen_petersen(),
        gen_circulant(20, {1, 2, 5}),
        gen_circulant(12, {1, 6}),
        gen_gnp(25, 0.15, 11),
        gen_random_regular(30, 4, 7),
        parse_edge_list("n 10\n0 1\n0 2\n0 3\n0 4\n0 5\n0 6\n0 7\n0 8\n0 9\n"),  // star
        parse_edge_list("n 3\n0 1\n"),  // K2 plus an isolated vertex
    };
}

}  // namespace

TEST_CASE("construct_alpha extremes") {
    Graph c5 = gen_cycle(5);
    auto all = construct_alpha(c5, Alpha(1, 2), with_p(1.0), 0);
    CHECK(all.sampled.size() == 5);  // every coin heads
    CHECK(all.repaired.empty());
    CHECK(all.size() == 5);
    CHECK(all.p_used == 1.0);

    auto none = construct_alpha(c5, Alpha(1, 2), with_p(0.0), 0);
    CHECK(none.sampled.empty());
    CHECK(none.repaired.size() == 5);  // everyone needs one neighbor, has none
    CHECK(none.size() == 5);
}

TEST_CASE("construct_alpha at the optimal bias is valid and reproducible") {
    Graph c5 = gen_cycle(5);
    ConstructionParams params;
    params.master_seed = 99;
    auto out = construct_alpha(c5, Alpha(1, 2), params, 3);
    CHECK(std::fabs(out.p_used - 0.4226497308103742) < 1e-12);
    CHECK(verify(c5, out.dominating, Mode::alpha_dom(Alpha(1, 2))).valid);

    auto again = construct_alpha(c5, Alpha(1, 2), params, 3);
    CHECK(again.dominating == out.dominating);
    CHECK(again.sampled == out.sampled);
    CHECK(again.seed == out.seed);

    auto different = construct_alpha(c5, Alpha(1, 2), params, 4);
    CHECK(different.seed != out.seed);

    // log-rule bias
    ConstructionParams cor;
    cor.p_rule = ConstructionParams::PRule::LogRule;
    auto lr = construct_alpha(c5, Alpha(1, 2), cor, 0);
    CHECK(std::fabs(lr.p_used - (std::log(3.0) / 3.0)) < 1e-12);
}

TEST_CASE("construct_alpha_rate hand-executed small cases") {
    // all coins tails: every K4 vertex needs 3 of its neighbors added
    auto k4 = construct_alpha_rate(gen_complete(4), Alpha(1, 1), with_p(0.0), 0);
    CHECK(k4.size() == 4);
    CHECK(k4.dominating == std::vector<int>{0, 1, 2, 3});

    // C5, threshold 1 per closed neighborhood: prefer-B reuse gives {0,1,2}
    auto c5 = construct_alpha_rate(gen_cycle(5), Alpha(1, 2), with_p(0.0), 0);
    CHECK(c5.dominating == std::vector<int>{0, 1, 2});
    CHECK(verify(gen_cycle(5), c5.dominating, Mode::alpha_rate(Alpha(1, 2))).valid);

    // all heads
    auto full = construct_alpha_rate(gen_petersen(), Alpha(1, 2), with_p(1.0), 0);
    CHECK(full.size() == 10);
}

TEST_CASE("greedy repair never invalidates and does not exceed proof order on samples") {
    for (int seed = 0; seed < 20; ++seed) {
        Graph g = gen_gnp(20, 0.3, 4000 + seed);
        ConstructionParams params;
        params.master_seed = seed;
        for (auto a : {Alpha(1, 2), Alpha(3, 4)}) {
            if (g.m() == 0) continue;
            auto proof = construct_alpha_rate(g, a, params, 0, RateRepair::ProofOrder);
            auto greedy = construct_alpha_rate(g, a, params, 0, RateRepair::Greedy);
            CHECK(verify(g, greedy.dominating, Mode::alpha_rate(a)).valid);
            CHECK(greedy.size() <= proof.size());
        }
    }
}

TEST_CASE("trial outcomes are valid across the corpus") {
    for (const auto& g : trial_corpus()) {
        ConstructionParams params;
        params.master_seed = 2025;
        for (auto a : {Alpha(1, 4), Alpha(1, 2)}) {
            for (int t = 0; t < 50; ++t) {
                auto open = construct_alpha(g, a, params, t);
                CHECK(verify(g, open.dominating, Mode::alpha_dom(a)).valid);
                CHECK(open.dominating.size() == open.size());
                auto rate = construct_alpha_rate(g, a, params, t);
                CHECK(verify(g, rate.dominating, Mode::alpha_rate(a)).valid);
            }
        }
    }
}

TEST_CASE("best_of_trials") {
    Graph c5 = gen_cycle(5);
    ConstructionParams one;
    one.master_seed = 7;
    auto single = construct_alpha(c5, Alpha(1, 2), one, 0);
    auto best1 = best_of_trials(c5, Mode::alpha_dom(Alpha(1, 2)), one);
    CHECK(best1.dominating == single.dominating);  // T = 1 is a single trial

    ConstructionParams many;
    many.master_seed = 7;
    many.trials = 200;
    auto best = best_of_trials(c5, Mode::alpha_dom(Alpha(1, 2)), many);
    CHECK(best.size() <= 3);  // floor of the 3.0755 expectation bound

    // a construction can never beat the exact optimum
    ConstructionParams pet;
    pet.master_seed = 1;
    pet.trials = 500;
    auto pbest = best_of_trials(gen_petersen(), Mode::alpha_dom(Alpha(1, 2)), pet);
    int opt = exact_number(gen_petersen(), Mode::alpha_dom(Alpha(1, 2))).value;
    CHECK(static_cast<int>(pbest.size()) >= opt);

    CHECK_THROWS_AS(best_of_trials(c5, Mode::dom(), many), std::invalid_argument);
}

TEST_CASE("expectation bound holds statistically (smoke, full run in acceptance)") {
    Graph pet = gen_petersen();
    Alpha a(1, 2);
    BoundInputs in = BoundInputs::from(pet, a);
    long double bound_abs = cr_alpha_bound(in).value * pet.n();

    ConstructionParams params;
    params.master_seed = 31337;
    const int N = 400;
    double sum = 0, sumsq = 0;
    for (int t = 0; t < N; ++t) {
        double s = static_cast<double>(construct_alpha(pet, a, params, t).size());
        sum += s;
        sumsq += s * s;
    }
    double mean = sum / N;
    double sd = std::sqrt((sumsq - N * mean * mean) / (N - 1));
    CHECK(mean <= static_cast<double>(bound_abs) + 3.0 * sd / std::sqrt(N));
}

TEST_CASE("edgeless constructions") {
    Graph empty = parse_edge_list("n 4\n");
    ConstructionParams params;
    CHECK_THROWS_AS(construct_alpha(empty, Alpha(1, 2), params, 0), std::domain_error);
    CHECK_THROWS_AS(construct_alpha_rate(empty, Alpha(1, 2), params, 0), std::domain_error);
    // with an override the construction still works and returns the empty set
    auto out = construct_alpha(empty, Alpha(1, 2), with_p(0.0), 0);
    CHECK(out.size() == 0);
    CHECK(derandomize_alpha(empty, Alpha(1, 2)).empty());
}

TEST_CASE("derandomization meets the hard bound on small cases") {
    Graph c5 = gen_cycle(5);
    auto d = derandomize_alpha(c5, Alpha(1, 2));
    CHECK(verify(c5, d, Mode::alpha_dom(Alpha(1, 2))).valid);
    CHECK(d.size() <= 3);  // bound is 3.0755...

    // bracketed by the exact optimum and the expectation bound
    Graph pet = gen_petersen();
    for (auto a : {Alpha(1, 4), Alpha(1, 2), Alpha(1, 1)}) {
        auto set = derandomize_alpha(pet, a);
        CHECK(verify(pet, set, Mode::alpha_dom(a)).valid);
        long double bound_abs = cr_alpha_bound(BoundInputs::from(pet, a)).value * pet.n();
        CHECK(static_cast<long double>(set.size()) <= bound_abs);
        CHECK(static_cast<int>(set.size()) >= exact_number(pet, Mode::alpha_dom(a)).value);
    }

    // repeated runs are identical
    CHECK(derandomize_alpha(pet, Alpha(1, 2)) == derandomize_alpha(pet, Alpha(1, 2)));
}

TEST_CASE("bias clamping on degenerate graphs") {
    // K2 plus three isolated vertices at alpha = 1: open degree 2/5, so the
    // unclamped minimizer is negative; the bias clamps to 0 and the
    // construction still returns a valid set
    Graph g = parse_edge_list("n 5\n0 1\n");
    Alpha one(1, 1);
    BoundInputs in = BoundInputs::from(g, one);
    auto p = optimal_p(in);
    REQUIRE(p.applicable);
    CHECK(p.value == 0.0L);
    ConstructionParams params;
    auto out = construct_alpha(g, one, params, 0);
    CHECK(out.p_used == 0.0);
    CHECK(verify(g, out.dominating, Mode::alpha_dom(one)).valid);
    CHECK(out.dominating == std::vector<int>{0, 1});

    // log rule clamps at 1 once (ln(dhat+1) + ln degree) / (dhat+1) passes 1
    BoundInputs k12 = BoundInputs::from(gen_complete(12), one);
    CHECK(log_rule_p(k12).value == 1.0L);
    ConstructionParams cor;
    cor.p_rule = ConstructionParams::PRule::LogRule;
    auto full = construct_alpha(gen_complete(12), one, cor, 0);
    CHECK(full.size() == 12);  // bias 1 selects everything
}

TEST_CASE("derandomization survives a bias that rounds to 1") {
    // a large star at alpha = 1/2 has a huge open degree (hub term C(150, 74))
    // with dhat = 1, so the optimal bias is 1 up to rounding
    std::string text = "n 151\n";
    for (int i = 1; i <= 150; ++i) text += "0 " + std::to_string(i) + "\n";
    Graph star = parse_edge_list(text);
    Alpha a(1, 2);
    auto d = derandomize_alpha(star, a);
    CHECK(verify(star, d, Mode::alpha_dom(a)).valid);
    long double bound_abs = cr_alpha_bound(BoundInputs::from(star, a)).value * star.n();
    CHECK(static_cast<long double>(d.size()) <= bound_abs);
}

TEST_CASE("outcome json shape") {
    auto out = construct_alpha(gen_cycle(5), Alpha(1, 2), with_p(0.0), 0);
    auto j = out.to_json();
    CHECK(j["size"] == 5);
    CHECK(j["D"].size() == 5);
    CHECK(j["A"].empty());
    CHECK(j["B"].size() == 5);
    std::string dumped = j.dump();
    CHECK(dumped.find("\"size\"") < dumped.find("\"p_used\""));  // stable key order
}
