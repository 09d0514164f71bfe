// Exercises the shared library strictly through the extern-C surface.
#include <doctest.h>

#include <cstring>
#include <string>

#include <json.hpp>

#include "ramsey/workbench.h"

using nlohmann::json;

namespace {

json parse_report(rwb_report* rep) {
    REQUIRE(rep != nullptr);
    json j = json::parse(rwb_report_json(rep));
    rwb_report_free(rep);
    return j;
}

}  // namespace

TEST_CASE("version and status names") {
    CHECK(std::string(rwb_version()) == "1.0.0");
    CHECK(std::string(rwb_status_name(RWB_OK)) == "ok");
    CHECK(std::string(rwb_status_name(RWB_ERROR_REGIME)) == "regime-violation");
}

TEST_CASE("graph handles round trip") {
    rwb_graph* g = nullptr;
    REQUIRE(rwb_graph_from_graph6("D~{", &g) == RWB_OK);
    CHECK(rwb_graph_order(g) == 5);
    CHECK(rwb_graph_edge_count(g) == 10);
    CHECK(rwb_graph_has_edge(g, 0, 1) == 1);
    CHECK(rwb_graph_has_edge(g, 0, 0) == -1);
    char* text = nullptr;
    REQUIRE(rwb_graph_to_graph6(g, &text) == RWB_OK);
    CHECK(std::string(text) == "D~{");
    rwb_string_free(text);
    rwb_graph* co = nullptr;
    REQUIRE(rwb_graph_complement(g, &co) == RWB_OK);
    CHECK(rwb_graph_edge_count(co) == 0);
    rwb_graph_free(co);
    rwb_graph_free(g);

    CHECK(rwb_graph_from_graph6("garbage\x01", &g) == RWB_ERROR_PARSE);
    CHECK(std::string(rwb_last_error()).size() > 0);
}

TEST_CASE("graph from edges") {
    const int endpoints[] = {0, 1, 1, 2, 2, 0};
    rwb_graph* g = nullptr;
    REQUIRE(rwb_graph_from_edges(3, endpoints, 3, &g) == RWB_OK);
    CHECK(rwb_graph_edge_count(g) == 3);
    rwb_graph_free(g);
    CHECK(rwb_graph_from_edges(2, endpoints, 3, &g) == RWB_ERROR_INVALID_ARGUMENT);
}

TEST_CASE("coloring handles and file io") {
    rwb_coloring* col = nullptr;
    REQUIRE(rwb_build_witness("w1", 1, 2, 10, &col) == RWB_OK);
    CHECK(rwb_coloring_order(col) == 25);
    char* text = nullptr;
    REQUIRE(rwb_coloring_format(col, &text) == RWB_OK);
    rwb_coloring* parsed = nullptr;
    REQUIRE(rwb_coloring_parse(text, &parsed) == RWB_OK);
    CHECK(rwb_coloring_order(parsed) == 25);
    rwb_string_free(text);
    REQUIRE(rwb_coloring_write_file(col, "capi_tmp.rcol") == RWB_OK);
    rwb_coloring* read = nullptr;
    REQUIRE(rwb_coloring_read_file("capi_tmp.rcol", &read) == RWB_OK);
    CHECK(rwb_coloring_order(read) == 25);
    std::remove("capi_tmp.rcol");
    rwb_coloring_free(read);
    rwb_coloring_free(parsed);
    rwb_coloring_free(col);

    CHECK(rwb_coloring_read_file("missing_file.rcol", &read) == RWB_ERROR_IO);
}

TEST_CASE("formula surface") {
    long long out = 0;
    REQUIRE(rwb_floor_an(1, 2, 7, &out) == RWB_OK);
    CHECK(out == 3);
    REQUIRE(rwb_lower_bound_value(1, 2, 100, &out) == RWB_OK);
    CHECK(out == 296);
    long long num = 0, den = 0;
    REQUIRE(rwb_asymptotic_main_term(3, 4, &num, &den) == RWB_OK);
    CHECK(num == 7);
    CHECK(den == 2);
    CHECK(rwb_asymptotic_main_term(1, 4, &num, &den) == RWB_ERROR_REGIME);
    REQUIRE(rwb_star_matching_ramsey(1, 2, 1, 0, &out) == RWB_OK);
    CHECK(out == 4);
    CHECK(rwb_star_matching_ramsey(3, 2, 1, 0, &out) == RWB_ERROR_REGIME);
    REQUIRE(rwb_star_matching_ramsey(3, 2, 1, 1, &out) == RWB_OK);
    CHECK(out == 5);
}

TEST_CASE("witness build + verify through the C surface") {
    rwb_coloring* col = nullptr;
    REQUIRE(rwb_build_witness("w4", 1, 1, 3, &col) == RWB_OK);
    int cycle = 0, fan = 0;
    REQUIRE(rwb_witness_targets("w4", 1, 1, 3, &cycle, &fan) == RWB_OK);
    CHECK(cycle == 6);
    CHECK(fan == 3);
    long long bound = 0;
    REQUIRE(rwb_witness_lower_bound("w4", 1, 1, 3, &bound) == RWB_OK);
    CHECK(bound == 11);
    CHECK(rwb_coloring_order(col) == 10);
    rwb_report* rep = nullptr;
    REQUIRE(rwb_verify_coloring(col, cycle, fan, &rep) == RWB_OK);
    CHECK(rwb_report_exit_code(rep) == 0);
    json j = parse_report(rep);
    CHECK(j["verdict"] == "avoids");
    rwb_coloring_free(col);

    CHECK(rwb_build_witness("w2", 1, 2, 10, &col) == RWB_ERROR_REGIME);
    CHECK(rwb_build_witness("w9", 1, 2, 10, &col) == RWB_ERROR_INVALID_ARGUMENT);
}

TEST_CASE("verify reports counterexamples with exit hint 2") {
    rwb_graph* empty = nullptr;
    REQUIRE(rwb_graph_from_graph6("D??", &empty) == RWB_OK);  // all-blue K_5
    rwb_coloring* col = nullptr;
    REQUIRE(rwb_coloring_from_red(empty, &col) == RWB_OK);
    rwb_graph_free(empty);
    rwb_report* rep = nullptr;
    REQUIRE(rwb_verify_coloring(col, 3, 2, &rep) == RWB_OK);
    CHECK(rwb_report_exit_code(rep) == 2);
    json j = parse_report(rep);
    CHECK(j["verdict"] == "contains-blue-fan");
    REQUIRE(j["witnesses"].size() == 1);
    CHECK(j["witnesses"][0]["kind"] == "blue-fan");
    rwb_coloring_free(col);
}

TEST_CASE("detectors through the C surface") {
    rwb_graph* g = nullptr;
    // Petersen graph
    const int pe[] = {0, 1, 1, 2, 2, 3, 3, 4, 4, 0, 0, 5, 1, 6, 2, 7, 3, 8, 4, 9,
                      5, 7, 7, 9, 9, 6, 6, 8, 8, 5};
    REQUIRE(rwb_graph_from_edges(10, pe, 15, &g) == RWB_OK);
    rwb_report* rep = nullptr;
    REQUIRE(rwb_detect_cycle(g, 0, 0, &rep) == RWB_OK);
    json c = parse_report(rep);
    CHECK(c["circumference"] == 9);
    CHECK(c["exact"] == true);
    REQUIRE(rwb_detect_cycle(g, 10, 0, &rep) == RWB_OK);
    json c10 = parse_report(rep);
    CHECK(c10["found"] == false);
    REQUIRE(rwb_detect_fan(g, 0, &rep) == RWB_OK);
    json f = parse_report(rep);
    CHECK(f["max_blades"] == 0);  // triangle-free, so every neighborhood is independent
    REQUIRE(rwb_detect_connected_matching(g, &rep) == RWB_OK);
    json cm = parse_report(rep);
    CHECK(cm["size"] == 5);
    REQUIRE(rwb_max_matching(g, &rep) == RWB_OK);
    json mm = parse_report(rep);
    CHECK(mm["size"] == 5);
    REQUIRE(rwb_berge_deficiency(g, &rep) == RWB_OK);
    json bd = parse_report(rep);
    CHECK(bd["deficiency"] == 0);
    rwb_graph_free(g);
}

TEST_CASE("search through the C surface") {
    rwb_report* rep = nullptr;
    REQUIRE(rwb_search_arrows(6, 3, 1, -1, 1, 1, nullptr, nullptr, &rep) == RWB_OK);
    json r6 = parse_report(rep);
    CHECK(r6["result"] == "arrows");
    REQUIRE(rwb_search_exact(3, 1, 10, -1, 2, &rep) == RWB_OK);
    json ex = parse_report(rep);
    CHECK(ex["result"] == "exact");
    CHECK(ex["value"] == 6);
    REQUIRE(ex["witnesses"].size() == 1);
    // the witness re-parses and re-verifies
    rwb_coloring* w = nullptr;
    std::string data = ex["witnesses"][0]["data"].get<std::string>();
    REQUIRE(rwb_coloring_parse(data.c_str(), &w) == RWB_OK);
    rwb_report* vrep = nullptr;
    REQUIRE(rwb_verify_coloring(w, 3, 1, &vrep) == RWB_OK);
    json v = parse_report(vrep);
    CHECK(v["verdict"] == "avoids");
    rwb_coloring_free(w);

    REQUIRE(rwb_random_audit(5, 3, 1, 0, 7, 1, &rep) == RWB_OK);
    json audit = parse_report(rep);
    CHECK(audit["samples"] == 1024);
    CHECK(audit["good_colorings"].get<std::uint64_t>() > 0);
}

TEST_CASE("lemma checkers through the C surface") {
    rwb_graph *host = nullptr, *red = nullptr;
    REQUIRE(rwb_graph_complete(8, &host) == RWB_OK);
    const int bip[] = {0, 4, 0, 5, 0, 6, 0, 7, 1, 4, 1, 5, 1, 6, 1, 7,
                       2, 4, 2, 5, 2, 6, 2, 7, 3, 4, 3, 5, 3, 6, 3, 7};
    REQUIRE(rwb_graph_from_edges(8, bip, 16, &red) == RWB_OK);
    rwb_report* rep = nullptr;
    REQUIRE(rwb_lemma_component(host, red, &rep) == RWB_OK);
    json comp = parse_report(rep);
    CHECK(comp["hypothesis_met"] == true);
    CHECK(comp["violated"] == false);
    rwb_graph_free(red);
    rwb_graph_free(host);

    REQUIRE(rwb_lemma_star_matching(1, 2, 1, -1, &rep) == RWB_OK);
    json star = parse_report(rep);
    CHECK(star["formula_value"] == 4);
    CHECK(star["violated"] == false);

    rwb_graph* c5 = nullptr;
    const int cyc[] = {0, 1, 1, 2, 2, 3, 3, 4, 4, 0};
    REQUIRE(rwb_graph_from_edges(5, cyc, 5, &c5) == RWB_OK);
    REQUIRE(rwb_lemma_dirac(c5, &rep) == RWB_OK);
    json dirac = parse_report(rep);
    CHECK(dirac["bound"] == 4);
    CHECK(dirac["circumference"] == 5);
    CHECK(dirac["holds"] == true);
    REQUIRE(rwb_lemma_dirac_chain(c5, &rep) == RWB_OK);
    json chain = parse_report(rep);
    CHECK(chain["violated"] == false);
    rwb_graph_free(c5);

    rwb_graph* k33 = nullptr;
    const int kc[] = {0, 3, 0, 4, 0, 5, 1, 3, 1, 4, 1, 5, 2, 3, 2, 4, 2, 5};
    REQUIRE(rwb_graph_from_edges(6, kc, 9, &k33) == RWB_OK);
    REQUIRE(rwb_lemma_bondy(k33, &rep) == RWB_OK);
    json bondy = parse_report(rep);
    CHECK(bondy["verdict"] == "exception-K_rr");
    rwb_graph_free(k33);
}

TEST_CASE("asymptotic table and literature through the C surface") {
    rwb_report* rep = nullptr;
    REQUIRE(rwb_asymptotic_table("1/2,3/4,1,3/2", 1000000, &rep) == RWB_OK);
    json t = parse_report(rep);
    REQUIRE(t["rows"].size() == 4);
    CHECK(t["rows"][1]["lower_bound"] == 3499996);
    REQUIRE(rwb_asymptotic_table("", 100, &rep) == RWB_OK);
    json empty = parse_report(rep);
    CHECK(empty["rows"].empty());
    REQUIRE(rwb_literature_value("c3-fan", 2, 0, &rep) == RWB_OK);
    json lit = parse_report(rep);
    CHECK(lit["value"] == 9);
    CHECK(rwb_literature_value("c3-fan", 1, 0, &rep) == RWB_ERROR_REGIME);
}
