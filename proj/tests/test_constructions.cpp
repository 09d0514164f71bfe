#include <doctest.h>

#include <algorithm>

#include "constructions.hpp"
#include "oracles.hpp"

using namespace ramsey;

TEST_CASE("rational parsing and regime comparisons") {
    CHECK(Rational::parse("1/2") == Rational(1, 2));
    CHECK(Rational::parse("3") == Rational(3, 1));
    CHECK(Rational::parse("6/4") == Rational(3, 2));
    CHECK_THROWS_AS(Rational::parse("0.5"), Error);
    CHECK_THROWS_AS(Rational::parse("1/0"), Error);
    CHECK(Rational(2, 5) < Rational(1, 2));
    CHECK(Rational(9, 20) < Rational(1, 2));
    CHECK(Rational(1, 2) >= Rational(1, 2));
}

TEST_CASE("floor_an") {
    CHECK(floor_an(Rational(1, 3), 10) == 3);
    CHECK(floor_an(Rational(1, 2), 7) == 3);
    CHECK(floor_an(Rational(3, 2), 10) == 15);
}

TEST_CASE("lower bound piecewise values") {
    CHECK(lower_bound_value(Rational(1, 2), 100) == 296);
    CHECK(lower_bound_value(Rational(1, 1), 10) == 39);
    CHECK(lower_bound_value(Rational(2, 5), 10) == 22);
    CHECK(lower_bound_value(Rational(1, 4), 8) == 18);
}

TEST_CASE("lower bound is monotone in n") {
    for (const char* a_text : {"1/5", "1/4", "2/5", "9/20", "1/2", "3/4", "1", "3/2"}) {
        Rational a = Rational::parse(a_text);
        long long prev = lower_bound_value(a, 2);
        for (long long n = 3; n <= 120; ++n) {
            long long cur = lower_bound_value(a, n);
            CHECK(cur >= prev);
            prev = cur;
        }
    }
}

TEST_CASE("asymptotic main term") {
    CHECK(asymptotic_main_term(Rational(1, 2)) == Rational(3, 1));
    CHECK(asymptotic_main_term(Rational(1, 1)) == Rational(4, 1));
    CHECK(asymptotic_main_term(Rational(3, 2)) == Rational(6, 1));
    CHECK_THROWS_AS(asymptotic_main_term(Rational(2, 5)), Error);
}

TEST_CASE("witness family shapes") {
    TwoColoring w1 = build_witness({Family::W1, Rational(1, 2), 10});
    CHECK(w1.order() == 25);
    auto comps = components(w1.red());
    REQUIRE(comps.size() == 3);
    CHECK(comps[0].size() == 9);
    CHECK(comps[1].size() == 8);
    CHECK(comps[2].size() == 8);

    TwoColoring w4 = build_witness({Family::W4, Rational(1, 1), 3});
    CHECK(w4.order() == 10);  // 4 floor(an) - 2
    auto w4comps = components(w4.red());
    REQUIRE(w4comps.size() == 2);
    CHECK(w4comps[0].size() == 5);
    CHECK(bipartition(w4.blue()).has_value());  // blue is K_{5,5}

    TwoColoring w3 = build_witness({Family::W3, Rational(1, 4), 8});
    CHECK(w3.order() == 17);
    CHECK(w3.red().max_degree() == 16);  // the joined clique vertex dominates
    CHECK(w3.red().edge_count() == 16);

    TwoColoring w5 = build_witness({Family::W5, Rational(1, 2), 2});
    CHECK(w5.order() == 8);
    CHECK(bipartition(w5.red()).has_value());
    CHECK(is_triangle_free(w5.red()));  // no red C_3
}

TEST_CASE("regime violations are rejected") {
    CHECK_THROWS_AS(build_witness({Family::W2, Rational(1, 2), 10}), Error);
    CHECK_THROWS_AS(build_witness({Family::W1, Rational(1, 4), 10}), Error);
    CHECK_THROWS_AS(build_witness({Family::W4, Rational(3, 4), 10}), Error);
    CHECK_THROWS_AS(build_witness({Family::W3, Rational(2, 5), 10}), Error);
    CHECK_THROWS_AS(build_witness({Family::W1, Rational(1, 2), 1}), Error);
}

TEST_CASE("verify_witness certifies the families") {
    TwoColoring w1 = build_witness({Family::W1, Rational(1, 2), 10});
    Certificate c1 = verify_witness(w1, 10, 10);
    CHECK(c1.verdict == Verdict::avoids);
    CHECK(c1.max_blades == 8);  // n - 2
    CHECK(c1.blue_path == "multipartite-formula");
    // cross-check the formula path against the per-center detectors
    SimpleGraph w1_blue = w1.blue();
    CHECK(!find_fan(w1_blue, 10).has_value());
    int direct = 0;
    for (int v = 0; v < w1_blue.order(); ++v)
        direct = std::max(direct, fan_blades_count(w1_blue, v));
    CHECK(direct == 8);

    TwoColoring w5 = build_witness({Family::W5, Rational(1, 2), 2});
    Certificate c5 = verify_witness(w5, 3, 2);
    CHECK(c5.verdict == Verdict::avoids);

    TwoColoring all_blue(SimpleGraph::empty(5));
    Certificate cb = verify_witness(all_blue, 3, 2);
    CHECK(cb.verdict == Verdict::contains_blue_fan);
    REQUIRE(cb.blue_fan.has_value());
    CHECK(cb.blue_fan->blade_count() >= 2);
    CHECK(validate_fan(all_blue.blue(), *cb.blue_fan));

    TwoColoring all_red(SimpleGraph::complete(6));
    Certificate cr = verify_witness(all_red, 4, 2);
    CHECK(cr.verdict == Verdict::contains_red_cycle);
    REQUIRE(cr.red_cycle.has_value());
    CHECK(cr.red_cycle->length() == 4);
    CHECK(validate_cycle(all_red.red(), *cr.red_cycle));
}

TEST_CASE("witness grid: order is lower bound minus one and verification passes") {
    struct Row {
        Family family;
        const char* a;
    };
    const Row rows[] = {{Family::W1, "1/2"}, {Family::W1, "3/4"},  {Family::W2, "2/5"},
                        {Family::W2, "9/20"}, {Family::W3, "1/5"}, {Family::W3, "3/10"},
                        {Family::W4, "1"},    {Family::W4, "2"},   {Family::W5, "1"}};
    for (const Row& row : rows) {
        for (long long n : {6, 11, 20}) {
            ConstructionSpec spec{row.family, Rational::parse(row.a), n};
            if (row.family != Family::W5 && floor_an(spec.a, n) < 2) continue;
            TwoColoring w = build_witness(spec);
            CHECK(w.order() == witness_lower_bound(spec) - 1);
            auto [m, fan] = witness_targets(spec);
            Certificate cert = verify_witness(w, m, fan);
            CHECK(cert.verdict == Verdict::avoids);
        }
    }
}

TEST_CASE("verify_witness falls back to exact detectors on unstructured colorings") {
    // red = Petersen: not a clique/split/complete-bipartite component
    TwoColoring pet(oracle::petersen());
    Certificate has5 = verify_witness(pet, 5, 4);
    CHECK(has5.verdict == Verdict::contains_red_cycle);
    REQUIRE(has5.red_cycle.has_value());
    CHECK(has5.red_cycle->length() == 5);

    Certificate no7 = verify_witness(pet, 7, 30);
    CHECK(no7.verdict == Verdict::avoids);
    CHECK(no7.red_path == "structural+exact-detector");
    REQUIRE(no7.red_components.size() == 1);
    CHECK(no7.red_components[0].circumference == 9);
}

TEST_CASE("certificates are self-validating") {
    std::uint64_t seed = 90210;
    for (int it = 0; it < 40; ++it) {
        int n = 4 + int(seed % 8);
        TwoColoring c(oracle::random_graph(n, seed, 30 + int(seed % 40)));
        int m = 3 + int(seed % 3);
        int fan = 1 + int(seed % 3);
        Certificate cert = verify_witness(c, m, fan);
        switch (cert.verdict) {
            case Verdict::contains_red_cycle:
                REQUIRE(cert.red_cycle.has_value());
                CHECK(cert.red_cycle->length() == m);
                CHECK(validate_cycle(c.red(), *cert.red_cycle));
                break;
            case Verdict::contains_blue_fan:
                REQUIRE(cert.blue_fan.has_value());
                CHECK(cert.blue_fan->blade_count() >= fan);
                CHECK(validate_fan(c.blue(), *cert.blue_fan));
                break;
            case Verdict::avoids:
                CHECK(!has_cycle_of_length(c.red(), m).has_value());
                CHECK(cert.max_blades < fan);
                break;
        }
    }
}

TEST_CASE("asymptotic table") {
    auto rows = asymptotic_table({Rational(3, 4), Rational(1, 1), Rational(1, 4)}, 1000000);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].lower_bound == 3499996);
    REQUIRE(rows[0].main_term_times_n.has_value());
    CHECK(*rows[0].main_term_times_n == Rational(3500000, 1));
    CHECK(*rows[0].relative_gap == Rational(4, 1000000));
    CHECK(rows[1].lower_bound == 3999999);
    CHECK(*rows[1].relative_gap == Rational(1, 1000000));
    CHECK(!rows[2].main_term_times_n.has_value());
    CHECK(asymptotic_table({}, 100).empty());
    auto small = asymptotic_table({Rational(1, 4)}, 100);
    CHECK(small[0].lower_bound == 225);
}

TEST_CASE("star/matchings formula") {
    CHECK(star_matching_ramsey(1, 2, 1) == 4);
    CHECK(star_matching_ramsey(2, 2, 2) == 5);
    CHECK(star_matching_ramsey(1, 1, 1) == 2);
    CHECK_THROWS_AS(star_matching_ramsey(3, 2, 1), Error);
    CHECK(star_matching_ramsey(3, 2, 1, true) == 2 + 1 - 1 + 3);
    CHECK_THROWS_AS(star_matching_ramsey(1, 1, 2), Error);  // needs n1 >= n2
}

TEST_CASE("literature values") {
    LiteratureResult c3 = literature_value("c3-fan", 2, 0);
    CHECK(c3.value == 9);
    CHECK(!c3.asymptotic_only);
    CHECK_THROWS_AS(literature_value("c3-fan", 1, 0), Error);

    LiteratureResult cvf = literature_value("cycle-vs-fan", 7, 2);
    CHECK(cvf.value == 13);
    CHECK_THROWS_AS(literature_value("cycle-vs-fan", 6, 2), Error);

    LiteratureResult ff = literature_value("fan-fan", 5, 1);
    CHECK(ff.value == 21);
    CHECK(ff.asymptotic_only);

    LiteratureResult ocf = literature_value("odd-cycle-fan", 10, 2);
    CHECK(ocf.value == 41);
    CHECK(ocf.asymptotic_only);

    CHECK_THROWS_AS(literature_value("nonsense", 3, 3), Error);
}

TEST_CASE("W4 and W5 bipartite structure via girth") {
    TwoColoring w4 = build_witness({Family::W4, Rational(1, 1), 4});
    auto bg = girth(w4.blue());
    REQUIRE(bg.has_value());
    CHECK(bg->first >= 4);
    TwoColoring w5 = build_witness({Family::W5, Rational(1, 2), 3});
    auto rg = girth(w5.red());
    REQUIRE(rg.has_value());
    CHECK(rg->first >= 4);
}
