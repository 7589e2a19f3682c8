#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pgg/errors.hpp"
#include "pgg/families.hpp"
#include "pgg/game.hpp"
#include "pgg/io.hpp"

#include <string>

using namespace pgg;

TEST_CASE("parse_instance: canonical example") {
    std::string text =
        "# the directed triangle\n"
        "p pgg 3 3\n"
        "k 1\n"
        "c 1/2\n"
        "a 0 1\n"
        "a 1 2\n"
        "a 2 0\n";
    auto li = parse_instance(text);
    CHECK(li.instance.graph == gen_cycle(3).instance.graph);
    CHECK(li.instance.k == 1);
    CHECK(li.instance.c == Rational(1, 2));
}

TEST_CASE("parse_instance rejections carry line numbers") {
    auto expect_fail = [](const std::string& text, const std::string& needle) {
        try {
            parse_instance(text);
            FAIL("expected ValidationError for: ", text);
        } catch (const ValidationError& e) {
            CHECK(std::string(e.what()).find(needle) != std::string::npos);
        }
    };
    expect_fail("p pgg 2 1\nc 1/1\na 0 1\n", "line 2");
    expect_fail("p pgg 2 1\nc 0/1\na 0 1\n", "(0,1)");
    expect_fail("p pgg 2 1\nk 0\na 0 1\n", "line 2");
    expect_fail("p pgg 2 2\na 0 1\na 0 1\n", "duplicate arc");
    expect_fail("p pgg 2 1\na 0 0\n", "self-loop");
    expect_fail("p pgg 2 1\na 0 2\n", "out of range");
    expect_fail("k 1\n", "before header");
    expect_fail("p pgg 2 2\na 0 1\n", "promises");
    expect_fail("", "missing");
}

TEST_CASE("instance round-trip is the identity on canonical form") {
    for (auto li : {gen_dkr(2, 1), gen_out_tree(2, 3), gen_random(9, 0.4, 3)}) {
        li.instance.c = Rational(3, 7);
        auto text = serialize_instance(li);
        auto back = parse_instance(text);
        CHECK(back.instance.graph == li.instance.graph);
        CHECK(back.instance.k == li.instance.k);
        CHECK(back.instance.c == li.instance.c);
        CHECK(back.names == li.names);
        CHECK(serialize_instance(back) == text);
    }
}

TEST_CASE("hypergraph round-trip and rejections") {
    Hypergraph3 h;
    h.n = 5;
    h.edges = {{0, 1, 2}, {2, 3, 4}};
    auto text = serialize_hypergraph(h);
    auto back = parse_hypergraph(text);
    CHECK(back.n == 5);
    CHECK(back.edges == h.edges);
    CHECK(serialize_hypergraph(back) == text);

    CHECK_THROWS_AS(parse_hypergraph("h 3uniform 3 1\ne 0 1 1\n"), ValidationError);
    CHECK_THROWS_AS(parse_hypergraph("e 0 1 2\n"), ValidationError);
}

TEST_CASE("pure profile round-trip") {
    auto inst = gen_out_tree(2, 3).instance;
    std::string text =
        "buy 0 1 2\n"
        "abstain 1\n"
        "abstain 2\n"
        "buy 3\nbuy 4\nbuy 5\nbuy 6\n";
    auto x = parse_pure_profile(inst, text);
    CHECK(x[0].buys);
    CHECK(x[0].targets == std::vector<Vertex>{1, 2});
    CHECK_FALSE(x[1].buys);
    CHECK(is_pure_nash_profile(inst, x).is_nash);
    auto back = parse_pure_profile(inst, serialize_pure_profile(x));
    CHECK(serialize_pure_profile(back) == serialize_pure_profile(x));

    CHECK_THROWS_AS(parse_pure_profile(inst, "buy 0 1\n"), ValidationError);  // k_0 = 2
    CHECK_THROWS_AS(parse_pure_profile(inst, text + "buy 0 1 2\n"), ValidationError);
}

TEST_CASE("mixed profile: line format and JSON round-trip") {
    auto c3 = gen_cycle(3).instance;
    auto sigma = parse_mixed_profile(c3, "mix 0 0.5 1\nmix 1 0.5 2\nmix 2 0.5 0\n");
    CHECK(sigma[0].buy_prob == 0.5);
    CHECK(sigma[0].nominations[0].first == std::vector<Vertex>{1});
    CHECK(is_mixed_nash(c3, sigma, 1e-9).is_nash);

    auto json_text = serialize_mixed_profile(sigma);
    auto back = parse_mixed_profile(c3, json_text);
    CHECK(serialize_mixed_profile(back) == json_text);

    // multi-set supports only exist in the JSON form
    MixedProfile multi(3);
    for (Vertex v = 0; v < 3; ++v) {
        multi[v].buy_prob = 0.5;
        multi[v].nominations = {{{(v + 1) % 3}, 1.0}};
    }
    auto multi2 = parse_mixed_profile(c3, serialize_mixed_profile(multi));
    CHECK(multi2[1].nominations.size() == 1);

    CHECK_THROWS_AS(parse_mixed_profile(c3, "mix 0 1.5 1\nabstain 1\nabstain 2\n"),
                    ValidationError);
}

TEST_CASE("reports are deterministic and digest-stable") {
    auto li = gen_dkr(1, 1);
    auto rep1 = make_report("solve-pure", li);
    auto rep2 = make_report("solve-pure", li);
    CHECK(report_to_string(rep1) == report_to_string(rep2));
    CHECK(instance_digest(li) == instance_digest(li));
    CHECK(instance_digest(li) != instance_digest(gen_dkr(1, 2)));
    CHECK(rep1["instance"]["c"] == "1/2");
}
