#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pgg/errors.hpp"
#include "pgg/families.hpp"
#include "pgg/game.hpp"
#include "pgg/pure_solvers.hpp"

#include <algorithm>
#include <cmath>
#include <random>

using namespace pgg;

namespace {

GameInstance random_instance(int n, double p, int k, std::mt19937& rng) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<Arc> arcs;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = 0; j < n; ++j)
            if (i != j && coin(rng) < p) arcs.push_back({i, j});
    GameInstance inst;
    inst.graph = Digraph(n, std::move(arcs));
    inst.k = k;
    return inst;
}

// Random valid pure profile: each vertex abstains or buys with a random
// nomination set of the mandated size.
PureProfile random_profile(const GameInstance& inst, std::mt19937& rng) {
    const int n = inst.graph.vertex_count();
    PureProfile x(n);
    for (Vertex v = 0; v < n; ++v) {
        if (rng() % 2) continue;
        x[v].buys = true;
        auto nbrs = inst.graph.out_neighbors(v);
        std::shuffle(nbrs.begin(), nbrs.end(), rng);
        nbrs.resize(inst.capacity(v));
        std::sort(nbrs.begin(), nbrs.end());
        x[v].targets = nbrs;
    }
    return x;
}

}  // namespace

TEST_CASE("instance validation and capacity") {
    GameInstance inst;
    inst.graph = Digraph(3, {{0, 1}, {0, 2}});
    inst.k = 2;
    inst.validate();
    CHECK(inst.capacity(0) == 2);
    CHECK(inst.capacity(1) == 0);
    inst.graph = Digraph(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 0}});
    CHECK(inst.capacity(0) == 2);
    CHECK(inst.capacity(1) == 1);

    inst.c = Rational(1);
    CHECK_THROWS_AS(inst.validate(), ValidationError);
    inst.c = Rational(1, 2);
    inst.k = 0;
    CHECK_THROWS_AS(inst.validate(), ValidationError);
}

TEST_CASE("pure profile validation names the offending vertex") {
    GameInstance inst;
    inst.graph = Digraph(3, {{0, 1}, {0, 2}});
    inst.k = 2;
    PureProfile x(3);
    x[0].buys = true;
    x[0].targets = {1};  // must nominate 2 = k_0 targets
    try {
        validate_pure_profile(inst, x);
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        CHECK(std::string(e.what()).find('0') != std::string::npos);
    }
}

TEST_CASE("pure costs: fixed examples") {
    GameInstance ab;
    ab.graph = Digraph(2, {{0, 1}});
    ab.c = Rational(1, 3);
    PureProfile x(2);
    x[0].buys = true;
    x[0].targets = {1};
    auto rep = pure_costs(ab, x);
    CHECK(rep.player_costs[0] == Rational(1, 3));
    CHECK(rep.player_costs[1] == 0);
    CHECK(rep.social_cost == Rational(1, 3));

    auto c3 = gen_cycle(3).instance;
    auto all_abstain = PureProfile(3);
    auto rep2 = pure_costs(c3, all_abstain);
    for (const auto& cost : rep2.player_costs) CHECK(cost == 1);
    CHECK(rep2.social_cost == 3);

    // isolated abstainer pays 1
    GameInstance iso;
    iso.graph = Digraph(1, {});
    CHECK(pure_costs(iso, PureProfile(1)).player_costs[0] == 1);
}

TEST_CASE("pure nash profile: fixed examples") {
    auto t23 = gen_out_tree(2, 3).instance;
    PureProfile x(7);
    x[0].buys = true;
    x[0].targets = {1, 2};
    for (Vertex leaf : {3, 4, 5, 6}) x[leaf].buys = true;  // sinks, empty sets
    CHECK(is_pure_nash_profile(t23, x).is_nash);

    auto c3 = gen_cycle(3).instance;
    PureProfile y(3);
    y[0].buys = true;
    y[0].targets = {1};
    auto v = is_pure_nash_profile(c3, y);
    CHECK_FALSE(v.is_nash);
    CHECK(v.deviating_vertex == 2);  // abstains uncovered

    GameInstance ab;
    ab.graph = Digraph(2, {{0, 1}});
    PureProfile z(2);
    z[0].buys = true;
    z[0].targets = {1};
    z[1].buys = true;
    auto w = is_pure_nash_profile(ab, z);
    CHECK_FALSE(w.is_nash);
    CHECK(w.deviating_vertex == 1);  // nominated buyer prefers abstaining
}

TEST_CASE("pure nash set and buyer set: T_{2,3} values") {
    auto t23 = gen_out_tree(2, 3).instance;

    auto good = is_pure_nash_set(t23, {0, 3, 4, 5, 6});
    CHECK(good.holds);
    REQUIRE(good.witness_extension.has_value());
    CHECK(good.witness_extension->at(0) == std::vector<Vertex>{1, 2});

    // {root, middle pair}: buyer set but not pure-Nash (root's out-neighbors
    // are both in S)
    auto mid = is_pure_nash_set(t23, {0, 1, 2});
    CHECK_FALSE(mid.holds);
    CHECK(is_buyer_set(t23, {0, 1, 2}).holds);

    // S = V: buyer set always, pure-Nash only without arcs
    std::vector<Vertex> all{0, 1, 2, 3, 4, 5, 6};
    CHECK(is_buyer_set(t23, all).holds);
    CHECK_FALSE(is_pure_nash_set(t23, all).holds);
    GameInstance arcless;
    arcless.graph = Digraph(3, {});
    CHECK(is_pure_nash_set(arcless, {0, 1, 2}).holds);

    auto c3 = gen_cycle(3).instance;
    CHECK_FALSE(is_buyer_set(c3, {0}).holds);
}

TEST_CASE("profile/set round-trip on random instances") {
    std::mt19937 rng(123);
    std::uniform_int_distribution<int> nd(1, 10);
    std::uniform_int_distribution<int> kd(1, 3);
    std::uniform_real_distribution<double> pd(0.1, 0.6);
    for (int trial = 0; trial < 400; ++trial) {
        auto inst = random_instance(nd(rng), pd(rng), kd(rng), rng);
        auto x = random_profile(inst, rng);
        auto verdict = is_pure_nash_profile(inst, x);
        if (verdict.is_nash) {
            auto S = buyers_of(x);
            auto set_verdict = is_pure_nash_set(inst, S);
            CHECK(set_verdict.holds);
        }
        // every witness extension converts back to a Nash profile
        auto S = buyers_of(x);
        auto sv = is_pure_nash_set(inst, S);
        if (sv.holds) {
            auto back = profile_from_extension(inst, S, *sv.witness_extension);
            CHECK(is_pure_nash_profile(inst, back).is_nash);
        }
    }
}

TEST_CASE("pure verdicts are independent of c") {
    std::mt19937 rng(321);
    std::uniform_int_distribution<int> nd(1, 8);
    std::uniform_int_distribution<int> kd(1, 3);
    for (int trial = 0; trial < 200; ++trial) {
        auto inst = random_instance(nd(rng), 0.4, kd(rng), rng);
        auto x = random_profile(inst, rng);
        std::vector<Rational> cs = {Rational(1, 10), Rational(1, 2), Rational(9, 10)};
        inst.c = cs[0];
        bool base = is_pure_nash_profile(inst, x).is_nash;
        auto S = buyers_of(x);
        bool base_set = is_pure_nash_set(inst, S).holds;
        for (const auto& c : cs) {
            inst.c = c;
            CHECK(is_pure_nash_profile(inst, x).is_nash == base);
            CHECK(is_pure_nash_set(inst, S).holds == base_set);
        }
    }
}

TEST_CASE("expected costs: fixed examples") {
    GameInstance ab;
    ab.graph = Digraph(2, {{0, 1}});
    ab.c = Rational(2, 5);
    MixedProfile sigma(2);
    sigma[0].buy_prob = 1.0;
    sigma[0].nominations = {{{1}, 1.0}};
    auto rep = expected_costs(ab, sigma);
    CHECK(rep.player_costs[0] == doctest::Approx(0.4).epsilon(1e-12));
    CHECK(rep.player_costs[1] == doctest::Approx(0.0).epsilon(1e-12));

    // C3 with p = 1-c everywhere: every expected cost is exactly c
    auto c3 = gen_cycle(3).instance;
    c3.c = Rational(3, 10);
    MixedProfile tau(3);
    for (Vertex v = 0; v < 3; ++v) {
        tau[v].buy_prob = 0.7;
        tau[v].nominations = {{{(v + 1) % 3}, 1.0}};
    }
    auto rep2 = expected_costs(c3, tau);
    for (double cost : rep2.player_costs) CHECK(cost == doctest::Approx(0.3).epsilon(1e-12));

    MixedProfile zero(3);
    auto rep3 = expected_costs(c3, zero);
    for (double cost : rep3.player_costs) CHECK(cost == doctest::Approx(1.0));
}

TEST_CASE("degenerate mixed profile costs equal pure costs exactly") {
    std::mt19937 rng(555);
    std::uniform_int_distribution<int> nd(1, 9);
    std::uniform_int_distribution<int> kd(1, 3);
    for (int trial = 0; trial < 200; ++trial) {
        auto inst = random_instance(nd(rng), 0.4, kd(rng), rng);
        inst.c = Rational(rng() % 9 + 1, 10);
        auto x = random_profile(inst, rng);
        auto pure = pure_costs(inst, x);
        auto mixed = expected_costs(inst, degenerate_mixed(inst, x));
        for (Vertex v = 0; v < inst.graph.vertex_count(); ++v)
            CHECK(mixed.player_costs[v] == to_double(pure.player_costs[v]));
    }
}

TEST_CASE("expected costs match Monte Carlo sampling") {
    std::mt19937 rng(777);
    std::uniform_int_distribution<int> nd(2, 6);
    for (int trial = 0; trial < 5; ++trial) {
        auto inst = random_instance(nd(rng), 0.5, 2, rng);
        inst.c = Rational(2, 5);
        const int n = inst.graph.vertex_count();
        MixedProfile sigma(n);
        std::uniform_real_distribution<double> pd(0.0, 1.0);
        for (Vertex v = 0; v < n; ++v) {
            sigma[v].buy_prob = pd(rng);
            // split mass over up to two random nomination sets
            auto nbrs = inst.graph.out_neighbors(v);
            auto draw_set = [&]() {
                auto s = nbrs;
                std::shuffle(s.begin(), s.end(), rng);
                s.resize(inst.capacity(v));
                std::sort(s.begin(), s.end());
                return s;
            };
            double w = 0.25 + 0.5 * pd(rng);
            sigma[v].nominations = {{draw_set(), w}, {draw_set(), 1.0 - w}};
        }
        auto analytic = expected_costs(inst, sigma);

        const int samples = 1'000'000;
        std::vector<double> total(n, 0.0);
        std::mt19937 sampler(trial);
        std::uniform_real_distribution<double> u01(0.0, 1.0);
        for (int s = 0; s < samples; ++s) {
            std::vector<char> covered(n, 0), buys(n, 0);
            for (Vertex v = 0; v < n; ++v) {
                if (u01(sampler) >= sigma[v].buy_prob) continue;
                buys[v] = 1;
                double roll = u01(sampler), acc = 0.0;
                for (const auto& [targets, weight] : sigma[v].nominations) {
                    acc += weight;
                    if (roll <= acc) {
                        for (Vertex t : targets) covered[t] = 1;
                        break;
                    }
                }
            }
            for (Vertex v = 0; v < n; ++v)
                total[v] += buys[v] ? to_double(inst.c) : (covered[v] ? 0.0 : 1.0);
        }
        for (Vertex v = 0; v < n; ++v) {
            double mean = total[v] / samples;
            double se = std::sqrt(0.25 / samples);  // variance of a bounded cost <= 1/4
            CHECK(std::abs(mean - analytic.player_costs[v]) <= 3.0 * se + 1e-9);
        }
    }
}

TEST_CASE("mixed nash verifier: fixed examples") {
    auto c3 = gen_cycle(3).instance;
    c3.c = Rational(1, 2);
    MixedProfile sigma(3);
    for (Vertex v = 0; v < 3; ++v) {
        sigma[v].buy_prob = 0.5;  // 1 - c
        sigma[v].nominations = {{{(v + 1) % 3}, 1.0}};
    }
    CHECK(is_mixed_nash(c3, sigma, 1e-9).is_nash);

    MixedProfile zero(3);
    auto v = is_mixed_nash(c3, zero, 1e-9);
    CHECK_FALSE(v.is_nash);
    CHECK(v.worst_regret > 0.4);
}

TEST_CASE("mixed profile validation") {
    auto c3 = gen_cycle(3).instance;
    MixedProfile sigma(3);
    sigma[0].buy_prob = 0.5;
    sigma[0].nominations = {{{1}, 0.6}, {{1}, 0.6}};  // weights sum to 1.2
    CHECK_THROWS_AS(validate_mixed_profile(c3, sigma), ValidationError);
    sigma[0].nominations = {{{2}, 1.0}};  // 2 is not an out-neighbor of 0
    CHECK_THROWS_AS(validate_mixed_profile(c3, sigma), ValidationError);
    sigma[0].buy_prob = 1.5;
    CHECK_THROWS_AS(validate_mixed_profile(c3, sigma), ValidationError);
}
