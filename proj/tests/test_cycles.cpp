#include <doctest.h>

#include "cycles.hpp"
#include "oracles.hpp"

using namespace ramsey;

TEST_CASE("girth fixed cases") {
    auto k4 = girth(SimpleGraph::complete(4));
    REQUIRE(k4.has_value());
    CHECK(k4->first == 3);
    CHECK(validate_cycle(SimpleGraph::complete(4), k4->second));

    SimpleGraph pet = oracle::petersen();
    CHECK(oracle::brute_girth(pet) == 5);
    auto pg = girth(pet);
    REQUIRE(pg.has_value());
    CHECK(pg->first == 5);
    CHECK(validate_cycle(pet, pg->second));

    CHECK(!girth(SimpleGraph::path(6)).has_value());
    CHECK(!girth(SimpleGraph::empty(4)).has_value());
}

TEST_CASE("girth equals the enumeration oracle on small graphs") {
    for (int n = 0; n <= 6; ++n) {
        oracle::for_all_graphs(n, [&](const SimpleGraph& g) {
            int expect = oracle::brute_girth(g);
            auto got = girth(g);
            if (expect == 0) {
                CHECK(!got.has_value());
            } else {
                REQUIRE(got.has_value());
                CHECK(got->first == expect);
                CHECK(got->second.length() == expect);
                CHECK(validate_cycle(g, got->second));
            }
        });
    }
}

TEST_CASE("circumference fixed cases") {
    CHECK(circumference(SimpleGraph::complete_bipartite(3, 3)).length == 6);
    SimpleGraph pet = oracle::petersen();
    CHECK(oracle::brute_circumference(pet) == 9);
    auto c = circumference(pet);
    CHECK(c.length == 9);
    REQUIRE(c.cycle.has_value());
    CHECK(validate_cycle(pet, *c.cycle));
    CHECK(c.exact);

    auto p4 = circumference(SimpleGraph::path(4));
    CHECK(p4.length == 0);
    CHECK(!p4.cycle.has_value());
}

TEST_CASE("fixed-length cycles") {
    auto c4_in_k5 = has_cycle_of_length(SimpleGraph::complete(5), 4);
    REQUIRE(c4_in_k5.has_value());
    CHECK(c4_in_k5->length() == 4);
    CHECK(validate_cycle(SimpleGraph::complete(5), *c4_in_k5));

    CHECK(!has_cycle_of_length(SimpleGraph::cycle(7), 6).has_value());

    SimpleGraph pet = oracle::petersen();
    CHECK(!has_cycle_of_length(pet, 10).has_value());
    auto nine = has_cycle_of_length(pet, 9);
    REQUIRE(nine.has_value());
    CHECK(validate_cycle(pet, *nine));
}

TEST_CASE("cycle spectrum fixed cases") {
    CHECK(cycle_spectrum(SimpleGraph::complete(5)) == std::set<int>{3, 4, 5});
    CHECK(cycle_spectrum(SimpleGraph::complete_bipartite(3, 3)) == std::set<int>{4, 6});
    CHECK(cycle_spectrum(oracle::petersen()) == std::set<int>{5, 6, 8, 9});
}

TEST_CASE("cycle spectrum equals naive enumeration") {
    for (int n = 0; n <= 6; ++n) {
        oracle::for_all_graphs(n, [&](const SimpleGraph& g) {
            CHECK(cycle_spectrum(g) == oracle::brute_cycle_spectrum(g));
        });
    }
    std::uint64_t seed = 31913;
    for (int it = 0; it < 250; ++it) {
        int n = 7 + int(seed % 3);  // 7..9
        SimpleGraph g = oracle::random_graph(n, seed, 25 + int(seed % 55));
        CHECK(cycle_spectrum(g) == oracle::brute_cycle_spectrum(g));
    }
}

TEST_CASE("circumference agrees with spectrum maximum on random graphs") {
    std::uint64_t seed = 161803;
    for (int it = 0; it < 120; ++it) {
        int n = 2 + int(seed % 9);
        SimpleGraph g = oracle::random_graph(n, seed, 20 + int(seed % 60));
        auto sp = cycle_spectrum(g);
        auto c = circumference(g);
        CHECK(c.length == (sp.empty() ? 0 : *sp.rbegin()));
        if (c.length > 0) {
            REQUIRE(c.cycle.has_value());
            CHECK(c.cycle->length() == c.length);
            CHECK(validate_cycle(g, *c.cycle));
        }
    }
}

TEST_CASE("size limits and the heuristic fallback") {
    // a 30-vertex cycle: one component above the exact limit
    SimpleGraph c30 = SimpleGraph::cycle(30);
    CHECK_THROWS_AS(circumference(c30), Error);
    auto h = circumference(c30, {true});
    CHECK(!h.exact);
    CHECK(h.length == 30);  // rotation closes the full cycle
    REQUIRE(h.cycle.has_value());
    CHECK(validate_cycle(c30, *h.cycle));
    CHECK_THROWS_AS(cycle_spectrum(c30), Error);
    CHECK_THROWS_AS(has_cycle_of_length(c30, 30), Error);
}

TEST_CASE("two-connectivity") {
    CHECK(is_two_connected(SimpleGraph::cycle(5)).two_connected);

    GraphBuilder bowtie(5);  // two triangles sharing vertex 2
    bowtie.add_edge(0, 1);
    bowtie.add_edge(0, 2);
    bowtie.add_edge(1, 2);
    bowtie.add_edge(2, 3);
    bowtie.add_edge(2, 4);
    bowtie.add_edge(3, 4);
    auto tc = is_two_connected(std::move(bowtie).build());
    CHECK(!tc.two_connected);
    CHECK(tc.connected);
    REQUIRE(tc.cut_vertex.has_value());
    CHECK(*tc.cut_vertex == 2);

    CHECK(!is_two_connected(SimpleGraph::path(3)).two_connected);
    CHECK(!is_two_connected(SimpleGraph::complete(2)).two_connected);  // n < 3
    CHECK(!is_two_connected(SimpleGraph::empty(5)).two_connected);
}

TEST_CASE("dirac fixed cases") {
    DiracReport k4 = check_dirac(SimpleGraph::complete(4));
    CHECK(k4.hypothesis_met);
    CHECK(k4.bound == 4);
    CHECK(k4.circumference == 4);
    CHECK(k4.holds);

    DiracReport c5 = check_dirac(SimpleGraph::cycle(5));
    CHECK(c5.bound == 4);
    CHECK(c5.circumference == 5);
    CHECK(c5.holds);

    DiracReport pet = check_dirac(oracle::petersen());
    CHECK(pet.bound == 6);
    CHECK(pet.circumference == 9);
    CHECK(pet.holds);

    CHECK(!check_dirac(SimpleGraph::path(4)).hypothesis_met);
}

TEST_CASE("bondy fixed cases") {
    CHECK(check_bondy(SimpleGraph::complete(5)).verdict == BondyVerdict::pancyclic);
    CHECK(check_bondy(SimpleGraph::complete_bipartite(3, 3)).verdict ==
          BondyVerdict::exception_krr);
    CHECK(check_bondy(SimpleGraph::cycle(4)).verdict == BondyVerdict::exception_krr);
    CHECK(check_bondy(SimpleGraph::cycle(6)).verdict == BondyVerdict::hypothesis_not_met);
}

TEST_CASE("dirac and bondy sweeps up to 7 vertices") {
    for (int n = 3; n <= 7; ++n) {
        oracle::for_all_graphs(n, [&](const SimpleGraph& g) {
            DiracReport d = check_dirac(g);
            if (d.hypothesis_met) CHECK(d.holds);
            BondyReport b = check_bondy(g);
            CHECK(b.verdict != BondyVerdict::violated);
        });
    }
}

TEST_CASE("witnesses always validate") {
    std::uint64_t seed = 271828;
    for (int it = 0; it < 100; ++it) {
        int n = 3 + int(seed % 8);
        SimpleGraph g = oracle::random_graph(n, seed, 30 + int(seed % 40));
        if (auto gi = girth(g)) CHECK(validate_cycle(g, gi->second));
        auto c = circumference(g);
        if (c.cycle) CHECK(validate_cycle(g, *c.cycle));
        for (int len = 3; len <= n; ++len)
            if (auto w = has_cycle_of_length(g, len)) {
                CHECK(w->length() == len);
                CHECK(validate_cycle(g, *w));
            }
    }
}
