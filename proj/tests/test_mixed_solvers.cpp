#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pgg/errors.hpp"
#include "pgg/families.hpp"
#include "pgg/game.hpp"
#include "pgg/mixed_solvers.hpp"

#include <cmath>
#include <random>

using namespace pgg;

namespace {

GameInstance random_instance(int n, double p, std::mt19937& rng) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<Arc> arcs;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = 0; j < n; ++j)
            if (i != j && coin(rng) < p) arcs.push_back({i, j});
    GameInstance inst;
    inst.graph = Digraph(n, std::move(arcs));
    return inst;
}

}  // namespace

TEST_CASE("designation picks the lowest out-neighbor") {
    Digraph g(4, {{0, 2}, {0, 1}, {1, 3}});
    auto d = designate_lowest_out_neighbors(g);
    CHECK(d.designated == std::vector<Vertex>{1, 3, -1, -1});
}

TEST_CASE("solve_mixed_k1: fixed examples") {
    GameInstance ab;
    ab.graph = Digraph(2, {{0, 1}});
    auto sigma = solve_mixed_k1(ab);
    CHECK(sigma[0].buy_prob == 1.0);
    CHECK(sigma[0].nominations == decltype(sigma[0].nominations){{{1}, 1.0}});
    CHECK(sigma[1].buy_prob == 0.0);
    CHECK(is_mixed_nash(ab, sigma, 1e-9).is_nash);

    auto c3 = gen_cycle(3).instance;
    c3.c = Rational(1, 2);
    auto tau = solve_mixed_k1(c3);
    for (Vertex v = 0; v < 3; ++v) {
        CHECK(tau[v].buy_prob == doctest::Approx(0.5).epsilon(1e-15));
        CHECK(tau[v].nominations[0].first == std::vector<Vertex>{(v + 1) % 3});
    }
    CHECK(is_mixed_nash(c3, tau, 1e-9).is_nash);

    // acyclic instance: phase 2 resolves everything into a 0/1 profile
    auto t23 = gen_out_tree(2, 3).instance;
    t23.k = 1;
    auto rho = solve_mixed_k1(t23);
    for (Vertex v = 0; v < 7; ++v)
        CHECK((rho[v].buy_prob == 0.0 || rho[v].buy_prob == 1.0));
    CHECK(is_mixed_nash(t23, rho, 1e-9).is_nash);

    GameInstance k2 = t23;
    k2.k = 2;
    CHECK_THROWS_AS(solve_mixed_k1(k2), ValidationError);
}

TEST_CASE("solve_mixed_k1 structure: p-values, coverage of zeros, residual cycles") {
    std::mt19937 rng(1234);
    std::uniform_int_distribution<int> nd(1, 40);
    std::uniform_real_distribution<double> pd(0.02, 0.4);
    for (int trial = 0; trial < 300; ++trial) {
        auto inst = random_instance(nd(rng), pd(rng), rng);
        inst.c = Rational(rng() % 9 + 1, 10);
        const double pc = 1.0 - to_double(inst.c);
        auto sigma = solve_mixed_k1(inst);
        auto desig = designate_lowest_out_neighbors(inst.graph).designated;
        const int n = inst.graph.vertex_count();

        for (Vertex v = 0; v < n; ++v) {
            double p = sigma[v].buy_prob;
            CHECK((p == 0.0 || p == 1.0 || p == doctest::Approx(pc).epsilon(1e-15)));
        }
        // each p=0 vertex is surely nominated by some p=1 vertex (possibly
        // several: late sources keep nominating already-covered targets);
        // no p=1 vertex is ever nominated
        for (Vertex v = 0; v < n; ++v) {
            int sure_nominators = 0;
            for (Vertex u : inst.graph.in_neighbors(v))
                if (sigma[u].buy_prob == 1.0 && !sigma[u].nominations.empty() &&
                    sigma[u].nominations[0].first == std::vector<Vertex>{v})
                    ++sure_nominators;
            if (sigma[v].buy_prob == 0.0) CHECK(sure_nominators >= 1);
            if (sigma[v].buy_prob == 1.0) {
                double nom_prob = 0.0;
                for (Vertex u : inst.graph.in_neighbors(v))
                    if (!sigma[u].nominations.empty() &&
                        sigma[u].nominations[0].first == std::vector<Vertex>{v})
                        nom_prob += sigma[u].buy_prob;
                CHECK(nom_prob == 0.0);
            }
        }
        // residual vertices form disjoint cycles in the designated subgraph
        for (Vertex v = 0; v < n; ++v) {
            if (sigma[v].buy_prob != 1.0 && sigma[v].buy_prob != 0.0) {
                REQUIRE(desig[v] != -1);
                Vertex t = desig[v];
                CHECK(sigma[t].buy_prob == sigma[v].buy_prob);
                int residual_in = 0;
                for (Vertex u = 0; u < n; ++u)
                    if (desig[u] == v && sigma[u].buy_prob != 1.0 && sigma[u].buy_prob != 0.0)
                        ++residual_in;
                CHECK(residual_in == 1);
            }
        }
        CHECK(is_mixed_nash(inst, sigma, 1e-9).is_nash);
    }
}

TEST_CASE("solve_mixed_k1 is Nash on 100 random digraphs per c value") {
    std::mt19937 rng(5150);
    std::uniform_int_distribution<int> nd(1, 200);
    for (int num = 1; num <= 9; num += 2) {
        Rational c(num, 10);
        std::mt19937 gen(num);
        for (int trial = 0; trial < 100; ++trial) {
            int n = nd(gen);
            auto inst = random_instance(n, 3.0 / n, gen);
            inst.c = c;
            auto sigma = solve_mixed_k1(inst);
            auto verdict = is_mixed_nash(inst, sigma, 1e-9);
            CHECK(verdict.is_nash);
        }
        (void)rng;
    }
}

TEST_CASE("uniform_profile: fixed examples") {
    auto dkr = gen_dkr(2, 1).instance;
    dkr.c = Rational(1, 2);
    double p = 1.0 - std::pow(0.5, 0.5);
    auto sigma = uniform_profile(dkr, p);
    CHECK(is_mixed_nash(dkr, sigma, 1e-9).is_nash);
    auto costs = expected_costs(dkr, sigma);
    for (double cost : costs.player_costs) CHECK(std::abs(cost - 0.5) <= 1e-12);

    auto c3 = gen_cycle(3).instance;
    c3.c = Rational(1, 4);
    auto tau = uniform_profile(c3, 0.75);
    auto rho = solve_mixed_k1(c3);
    for (Vertex v = 0; v < 3; ++v) {
        CHECK(tau[v].buy_prob == doctest::Approx(rho[v].buy_prob).epsilon(1e-15));
        CHECK(tau[v].nominations == rho[v].nominations);
    }

    CHECK_FALSE(is_mixed_nash(c3, uniform_profile(c3, 0.0), 1e-9).is_nash);

    // refused when a vertex would have to choose among its out-neighbors
    auto t23 = gen_out_tree(2, 3).instance;
    t23.k = 1;
    CHECK_THROWS_AS(uniform_profile(t23, 0.5), ValidationError);
}
