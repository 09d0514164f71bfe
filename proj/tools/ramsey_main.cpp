// Command-line surface of the Ramsey workbench. Talks to the core strictly
// through the C API in ramsey/workbench.h; every command emits a JSON report
// with a stable schema (see docs/report-schema.md) and the documented exit
// codes: 0 ok / verified-avoids, 1 usage or parse error, 2 counterexample
// found, 3 budget exhausted, 4 internal inconsistency.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ramsey/workbench.h"

using nlohmann::json;

namespace {

struct GlobalOpts {
    bool stable_output = false;
    int threads = 1;
    std::optional<unsigned long long> seed;
};

int exit_code_for(rwb_status st) {
    switch (st) {
        case RWB_OK: return 0;
        case RWB_ERROR_BUDGET_EXHAUSTED: return 3;
        case RWB_ERROR_INCONSISTENT:
        case RWB_ERROR_INTERNAL: return 4;
        default: return 1;
    }
}

[[noreturn]] void die(rwb_status st, const std::string& context) {
    std::cerr << "error (" << rwb_status_name(st) << "): " << context;
    const char* detail = rwb_last_error();
    if (detail && *detail) std::cerr << ": " << detail;
    std::cerr << "\n";
    std::exit(exit_code_for(st));
}

void check(rwb_status st, const std::string& context) {
    if (st != RWB_OK) die(st, context);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) die(RWB_ERROR_IO, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// graph6 files may carry several graphs one per line; we use the first.
rwb_graph* load_graph(const std::string& path) {
    std::istringstream in(read_file(path));
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        rwb_graph* g = nullptr;
        check(rwb_graph_from_graph6(line.c_str(), &g), "parsing '" + path + "'");
        return g;
    }
    die(RWB_ERROR_PARSE, "no graph6 line in '" + path + "'");
}

std::string utc_now() {
    std::time_t t = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

// Lifts the payload's witnesses into the envelope and prints the report.
int emit(const GlobalOpts& g, const std::string& command, json parameters, json result,
         int exit_code, double wall_seconds,
         std::optional<unsigned long long> seed = std::nullopt, int thread_count = 1) {
    json witnesses = json::array();
    if (result.is_object() && result.contains("witnesses")) {
        witnesses = std::move(result["witnesses"]);
        result.erase("witnesses");
    }
    if (g.stable_output && result.is_object() && result.contains("wall_seconds"))
        result["wall_seconds"] = 0.0;
    json provenance{{"tool_version", rwb_version()}, {"thread_count", thread_count}};
    if (seed)
        provenance["seed"] = *seed;
    else
        provenance["seed"] = nullptr;
    if (!g.stable_output) provenance["created_utc"] = utc_now();
    json envelope{{"schema_version", "1"},
                  {"command", command},
                  {"parameters", std::move(parameters)},
                  {"result", std::move(result)},
                  {"witnesses", std::move(witnesses)},
                  {"timing", json{{"wall_seconds", g.stable_output ? 0.0 : wall_seconds}}},
                  {"provenance", std::move(provenance)}};
    std::cout << envelope.dump(2) << "\n";
    return exit_code;
}

int emit_report(const GlobalOpts& g, const std::string& command, json parameters,
                rwb_report* rep, double wall,
                std::optional<unsigned long long> seed = std::nullopt, int threads = 1) {
    json result = json::parse(rwb_report_json(rep));
    int code = rwb_report_exit_code(rep);
    rwb_report_free(rep);
    return emit(g, command, std::move(parameters), std::move(result), code, wall, seed,
                threads);
}

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

void parse_ratio(const std::string& text, long long& num, long long& den) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            if (text.find('.') != std::string::npos)
                die(RWB_ERROR_PARSE, "decimal input rejected; write rationals as P/Q");
            num = std::stoll(text);
            den = 1;
        } else {
            num = std::stoll(text.substr(0, slash));
            den = std::stoll(text.substr(slash + 1));
        }
    } catch (const std::exception&) {
        die(RWB_ERROR_PARSE, "bad rational '" + text + "'");
    }
}

std::vector<int> parse_vertex_list(const std::string& text) {
    std::vector<int> out;
    std::istringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        try {
            out.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            die(RWB_ERROR_PARSE, "bad vertex '" + tok + "'");
        }
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ramsey workbench: extremal colorings, lemma checkers and exact search "
                 "for cycle-versus-fan Ramsey problems"};
    app.require_subcommand(1);

    GlobalOpts g;
    if (const char* env = std::getenv("RAMSEY_WORKBENCH_THREADS")) {
        int t = std::atoi(env);
        if (t >= 1) g.threads = t;
    }
    app.add_flag("--stable-output", g.stable_output,
                 "omit timestamps and zero wall times for byte-identical output");
    app.set_version_flag("--version", rwb_version());
    app.fallthrough();

    // ---- construct -----------------------------------------------------
    auto* construct = app.add_subcommand("construct", "build an extremal witness coloring");
    construct->fallthrough();
    std::string c_family, c_a = "1/2", c_out;
    long long c_n = 0;
    construct->add_option("--family", c_family, "w1|w2|w3|w4|w5")->required();
    construct->add_option("--a", c_a, "ratio a as P/Q (ignored for w5)");
    construct->add_option("--n", c_n, "fan parameter n")->required();
    construct->add_option("--out", c_out, "output RAMSEY-COLORING v1 path")->required();
    construct->callback([&] {
        Timer timer;
        long long an = 1, ad = 1;
        parse_ratio(c_a, an, ad);
        rwb_coloring* col = nullptr;
        check(rwb_build_witness(c_family.c_str(), an, ad, c_n, &col), "building witness");
        check(rwb_coloring_write_file(col, c_out.c_str()), "writing '" + c_out + "'");
        int cycle = 0, fan = 0;
        long long bound = 0;
        check(rwb_witness_targets(c_family.c_str(), an, ad, c_n, &cycle, &fan), "targets");
        check(rwb_witness_lower_bound(c_family.c_str(), an, ad, c_n, &bound), "lower bound");
        int n_vertices = rwb_coloring_order(col);
        rwb_coloring_free(col);
        json result{{"family", c_family},
                    {"n_vertices", n_vertices},
                    {"out", c_out},
                    {"target_cycle", cycle},
                    {"target_fan", fan},
                    {"lower_bound", bound},
                    {"implies", "R(C_" + std::to_string(cycle) + ", F_" + std::to_string(fan) +
                                    ") >= " + std::to_string(bound)}};
        json params{{"family", c_family}, {"a", c_a}, {"n", c_n}, {"out", c_out}};
        std::exit(emit(g, "construct", params, result, 0, timer.seconds()));
    });

    // ---- verify ----------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "certify that a coloring avoids the targets");
    verify->fallthrough();
    std::string v_path;
    int v_cycle = 0, v_fan = 0;
    bool v_json = false;
    verify->add_option("--coloring", v_path, "RAMSEY-COLORING v1 file")->required();
    verify->add_option("--cycle", v_cycle, "red cycle length M")->required();
    verify->add_option("--fan", v_fan, "blue fan blade count N")->required();
    verify->add_flag("--json", v_json, "emit the full JSON report");
    verify->callback([&] {
        Timer timer;
        rwb_coloring* col = nullptr;
        check(rwb_coloring_read_file(v_path.c_str(), &col), "reading '" + v_path + "'");
        rwb_report* rep = nullptr;
        rwb_status st = rwb_verify_coloring(col, v_cycle, v_fan, &rep);
        rwb_coloring_free(col);
        check(st, "verify");
        json params{{"coloring", v_path}, {"cycle", v_cycle}, {"fan", v_fan}};
        if (v_json) {
            std::exit(emit_report(g, "verify", params, rep, timer.seconds()));
        }
        json result = json::parse(rwb_report_json(rep));
        int code = rwb_report_exit_code(rep);
        rwb_report_free(rep);
        std::cout << result["verdict"].get<std::string>() << " (n=" << result["n"]
                  << ", red C_" << v_cycle << ", blue F_" << v_fan
                  << ", max blue blades " << result["max_blue_blades"] << ")\n";
        std::exit(code);
    });

    // ---- detect ----------------------------------------------------------
    auto* detect = app.add_subcommand("detect", "run a structure detector on a graph");
    detect->fallthrough();
    detect->require_subcommand(1);
    std::string d_graph;
    int d_length = 0, d_blades = 0;
    bool d_heuristic = false;
    auto* d_cycle = detect->add_subcommand("cycle", "circumference / fixed-length cycle");
    d_cycle->fallthrough();
    d_cycle->add_option("--graph", d_graph, "graph6 file")->required();
    d_cycle->add_option("--length", d_length, "search for this exact length");
    d_cycle->add_flag("--heuristic", d_heuristic,
                      "allow a non-exact lower bound on oversized components");
    d_cycle->callback([&] {
        Timer timer;
        rwb_graph* gr = load_graph(d_graph);
        rwb_report* rep = nullptr;
        rwb_status st = rwb_detect_cycle(gr, d_length, d_heuristic ? 1 : 0, &rep);
        rwb_graph_free(gr);
        check(st, "detect cycle");
        json params{{"graph", d_graph}, {"length", d_length}, {"heuristic", d_heuristic}};
        std::exit(emit_report(g, "detect cycle", params, rep, timer.seconds()));
    });
    auto* d_fan = detect->add_subcommand("fan", "maximum fan blades over all centers");
    d_fan->fallthrough();
    d_fan->add_option("--graph", d_graph, "graph6 file")->required();
    d_fan->add_option("--blades", d_blades, "search for a fan with this many blades");
    d_fan->callback([&] {
        Timer timer;
        rwb_graph* gr = load_graph(d_graph);
        rwb_report* rep = nullptr;
        rwb_status st = rwb_detect_fan(gr, d_blades, &rep);
        rwb_graph_free(gr);
        check(st, "detect fan");
        json params{{"graph", d_graph}, {"blades", d_blades}};
        std::exit(emit_report(g, "detect fan", params, rep, timer.seconds()));
    });
    auto* d_cm = detect->add_subcommand("cmatching", "connected matching number");
    d_cm->fallthrough();
    d_cm->add_option("--graph", d_graph, "graph6 file")->required();
    d_cm->callback([&] {
        Timer timer;
        rwb_graph* gr = load_graph(d_graph);
        rwb_report* rep = nullptr;
        rwb_status st = rwb_detect_connected_matching(gr, &rep);
        rwb_graph_free(gr);
        check(st, "detect cmatching");
        json params{{"graph", d_graph}};
        std::exit(emit_report(g, "detect cmatching", params, rep, timer.seconds()));
    });

    // ---- search ----------------------------------------------------------
    auto* search = app.add_subcommand("search", "exhaustive arrows / exact Ramsey search");
    search->fallthrough();
    search->require_subcommand(1);
    int s_n = 0, s_cycle = 3, s_fan = 1, s_maxn = 0;
    double s_budget = -1;
    int s_threads = 0;
    bool s_noprune = false;
    std::string s_resume, s_checkpoint;
    unsigned long long s_samples = 0;
    bool s_exhaustive = false;
    std::string s_seed_text;
    std::string s_witness_out;

    auto* s_arrows = search->add_subcommand("arrows", "does K_n arrow (red C_m, blue F_f)?");
    s_arrows->fallthrough();
    s_arrows->add_option("--n", s_n, "order of the complete graph")->required();
    s_arrows->add_option("--cycle", s_cycle, "red cycle length")->required();
    s_arrows->add_option("--fan", s_fan, "blue fan blades")->required();
    s_arrows->add_option("--budget", s_budget, "wall-clock budget in seconds");
    s_arrows->add_option("--threads", s_threads, "worker threads (default 1 or env)");
    s_arrows->add_flag("--no-prune", s_noprune, "disable symmetry pruning");
    s_arrows->add_option("--resume", s_resume, "resume from a frontier checkpoint");
    s_arrows->add_option("--checkpoint", s_checkpoint, "frontier path on budget exhaustion");
    s_arrows->callback([&] {
        Timer timer;
        int threads = s_threads >= 1 ? s_threads : g.threads;
        rwb_report* rep = nullptr;
        rwb_status st = rwb_search_arrows(s_n, s_cycle, s_fan, s_budget, threads,
                                          s_noprune ? 0 : 1,
                                          s_resume.empty() ? nullptr : s_resume.c_str(),
                                          s_checkpoint.empty() ? nullptr : s_checkpoint.c_str(),
                                          &rep);
        check(st, "search arrows");
        json params{{"n", s_n},        {"cycle", s_cycle},   {"fan", s_fan},
                    {"budget", s_budget}, {"threads", threads}, {"pruning", !s_noprune}};
        std::exit(emit_report(g, "search arrows", params, rep, timer.seconds(), std::nullopt,
                              threads));
    });
    auto* s_exact = search->add_subcommand("exact", "smallest N that arrows the targets");
    s_exact->fallthrough();
    s_exact->add_option("--cycle", s_cycle, "red cycle length")->required();
    s_exact->add_option("--fan", s_fan, "blue fan blades")->required();
    s_exact->add_option("--max-n", s_maxn, "upper limit for the search")->required();
    s_exact->add_option("--budget", s_budget, "wall-clock budget in seconds");
    s_exact->add_option("--threads", s_threads, "worker threads");
    s_exact->callback([&] {
        Timer timer;
        int threads = s_threads >= 1 ? s_threads : g.threads;
        rwb_report* rep = nullptr;
        check(rwb_search_exact(s_cycle, s_fan, s_maxn, s_budget, threads, &rep),
              "search exact");
        json params{{"cycle", s_cycle}, {"fan", s_fan},      {"max_n", s_maxn},
                    {"budget", s_budget}, {"threads", threads}};
        std::exit(emit_report(g, "search exact", params, rep, timer.seconds(), std::nullopt,
                              threads));
    });
    auto* s_audit = search->add_subcommand("audit", "random-coloring audit of the targets");
    s_audit->fallthrough();
    s_audit->add_option("--n", s_n, "order of the complete graph")->required();
    s_audit->add_option("--cycle", s_cycle, "red cycle length")->required();
    s_audit->add_option("--fan", s_fan, "blue fan blades")->required();
    s_audit->add_option("--samples", s_samples, "number of random colorings");
    s_audit->add_flag("--exhaustive", s_exhaustive, "sweep all colorings instead");
    s_audit->add_option("--seed", s_seed_text, "RNG seed (recorded in provenance)");
    s_audit->add_option("--witness-out", s_witness_out,
                        "write the first counterexample coloring here");
    s_audit->callback([&] {
        Timer timer;
        unsigned long long seed;
        if (!s_seed_text.empty()) {
            seed = std::stoull(s_seed_text);
        } else {
            std::random_device rd;
            seed = (unsigned long long)rd() << 32 | rd();
        }
        if (!s_exhaustive && s_samples == 0)
            die(RWB_ERROR_INVALID_ARGUMENT, "--samples required unless --exhaustive");
        rwb_report* rep = nullptr;
        check(rwb_random_audit(s_n, s_cycle, s_fan, s_samples, seed, s_exhaustive ? 1 : 0,
                               &rep),
              "search audit");
        if (!s_witness_out.empty()) {
            json result = json::parse(rwb_report_json(rep));
            if (!result["witnesses"].empty()) {
                std::ofstream out(s_witness_out, std::ios::binary);
                out << result["witnesses"][0]["data"].get<std::string>();
            }
        }
        json params{{"n", s_n},           {"cycle", s_cycle},
                    {"fan", s_fan},       {"samples", s_samples},
                    {"exhaustive", s_exhaustive}};
        std::exit(emit_report(g, "search audit", params, rep, timer.seconds(), seed));
    });

    // ---- lemma -----------------------------------------------------------
    auto* lemma = app.add_subcommand("lemma", "executable checkers for the classical lemmas");
    lemma->fallthrough();
    lemma->require_subcommand(1);
    std::string l_graph, l_coloring, l_host, l_red, l_eps = "1/200", l_part1, l_part2;
    std::string l_a = "1/2", l_beta = "0", l_regime = "partI";
    int l_k = 1, l_n1 = 1, l_n2 = 1, l_maxdefect = -1;
    double l_budget = -1;

    auto* l_component = lemma->add_subcommand(
        "component", "large monochromatic component under a degree hypothesis");
    l_component->fallthrough();
    l_component->add_option("--coloring", l_coloring, "RAMSEY-COLORING v1 file (host K_n)");
    l_component->add_option("--host", l_host, "host graph6 file");
    l_component->add_option("--red", l_red, "red subgraph graph6 file");
    l_component->callback([&] {
        Timer timer;
        rwb_graph *host = nullptr, *red = nullptr;
        if (!l_coloring.empty()) {
            rwb_coloring* col = nullptr;
            check(rwb_coloring_read_file(l_coloring.c_str(), &col), "reading coloring");
            check(rwb_graph_complete(rwb_coloring_order(col), &host), "host");
            check(rwb_coloring_red_graph(col, &red), "red graph");
            rwb_coloring_free(col);
        } else if (!l_host.empty() && !l_red.empty()) {
            host = load_graph(l_host);
            red = load_graph(l_red);
        } else {
            die(RWB_ERROR_INVALID_ARGUMENT, "need --coloring or both --host and --red");
        }
        rwb_report* rep = nullptr;
        rwb_status st = rwb_lemma_component(host, red, &rep);
        rwb_graph_free(host);
        rwb_graph_free(red);
        check(st, "lemma component");
        json params{{"coloring", l_coloring}, {"host", l_host}, {"red", l_red}};
        std::exit(emit_report(g, "lemma component", params, rep, timer.seconds()));
    });

    auto* l_bimatch = lemma->add_subcommand(
        "bimatch", "dense bipartite graphs contain large connected matchings");
    l_bimatch->fallthrough();
    l_bimatch->add_option("--graph", l_graph, "graph6 file")->required();
    l_bimatch->add_option("--eps", l_eps, "epsilon as P/Q (0 < eps < 1/100)");
    l_bimatch->add_option("--part1", l_part1, "comma-separated vertices of V1")->required();
    l_bimatch->add_option("--part2", l_part2, "comma-separated vertices of V2")->required();
    l_bimatch->callback([&] {
        Timer timer;
        rwb_graph* gr = load_graph(l_graph);
        long long en = 1, ed = 200;
        parse_ratio(l_eps, en, ed);
        auto p1 = parse_vertex_list(l_part1);
        auto p2 = parse_vertex_list(l_part2);
        rwb_report* rep = nullptr;
        rwb_status st = rwb_lemma_figaj_luczak(gr, p1.data(), p1.size(), p2.data(), p2.size(),
                                               en, ed, &rep);
        rwb_graph_free(gr);
        check(st, "lemma bimatch");
        json params{{"graph", l_graph}, {"eps", l_eps}, {"part1", l_part1}, {"part2", l_part2}};
        std::exit(emit_report(g, "lemma bimatch", params, rep, timer.seconds()));
    });

    auto* l_star = lemma->add_subcommand("starmatch",
                                         "3-color star/matchings number by exhaustion");
    l_star->fallthrough();
    l_star->add_option("--k", l_k, "star size")->required();
    l_star->add_option("--n1", l_n1, "first matching size")->required();
    l_star->add_option("--n2", l_n2, "second matching size")->required();
    l_star->add_option("--budget", l_budget, "wall-clock budget in seconds");
    l_star->callback([&] {
        Timer timer;
        rwb_report* rep = nullptr;
        check(rwb_lemma_star_matching(l_k, l_n1, l_n2, l_budget, &rep), "lemma starmatch");
        json params{{"k", l_k}, {"n1", l_n1}, {"n2", l_n2}, {"budget", l_budget}};
        std::exit(emit_report(g, "lemma starmatch", params, rep, timer.seconds()));
    });

    auto add_graph_lemma = [&](const char* name, const char* help,
                               rwb_status (*fn)(const rwb_graph*, rwb_report**)) {
        auto* sub = lemma->add_subcommand(name, help);
        sub->fallthrough();
        sub->add_option("--graph", l_graph, "graph6 file")->required();
        sub->callback([&, name, fn] {
            Timer timer;
            rwb_graph* gr = load_graph(l_graph);
            rwb_report* rep = nullptr;
            rwb_status st = fn(gr, &rep);
            rwb_graph_free(gr);
            check(st, std::string("lemma ") + name);
            json params{{"graph", l_graph}};
            std::exit(emit_report(g, std::string("lemma ") + name, params, rep,
                                  timer.seconds()));
        });
    };
    add_graph_lemma("dirac", "circumference bound for 2-connected graphs", rwb_lemma_dirac);
    add_graph_lemma("bondy", "pancyclicity under the half-degree hypothesis", rwb_lemma_bondy);
    add_graph_lemma("diracchain", "Dirac bound plus connected-matching extraction",
                    rwb_lemma_dirac_chain);

    auto* l_claims = lemma->add_subcommand("claims", "audit the proof's claim thresholds");
    l_claims->fallthrough();
    l_claims->add_option("--host", l_host, "host graph6 file")->required();
    l_claims->add_option("--red", l_red, "red subgraph graph6 file")->required();
    l_claims->add_option("--a", l_a, "ratio a as P/Q")->required();
    l_claims->add_option("--beta", l_beta, "beta as P/Q");
    l_claims->add_option("--regime", l_regime, "partI or partII");
    l_claims->add_option("--max-defect", l_maxdefect,
                         "cap on per-vertex absent pairs (default: no cap)");
    l_claims->callback([&] {
        Timer timer;
        rwb_graph* host = load_graph(l_host);
        rwb_graph* red = load_graph(l_red);
        long long an = 1, ad = 2, bn = 0, bd = 1;
        parse_ratio(l_a, an, ad);
        parse_ratio(l_beta, bn, bd);
        int cap = l_maxdefect >= 0 ? l_maxdefect : rwb_graph_order(host);
        rwb_report* rep = nullptr;
        rwb_status st =
            rwb_claims_audit(host, red, an, ad, bn, bd, l_regime.c_str(), cap, &rep);
        rwb_graph_free(host);
        rwb_graph_free(red);
        check(st, "lemma claims");
        json params{{"host", l_host},     {"red", l_red},       {"a", l_a},
                    {"beta", l_beta},     {"regime", l_regime}, {"max_defect", cap}};
        std::exit(emit_report(g, "lemma claims", params, rep, timer.seconds()));
    });

    // ---- table ------------------------------------------------------------
    auto* table = app.add_subcommand("table", "lower bounds against the asymptotic value");
    table->fallthrough();
    std::string t_alist;
    long long t_n = 0;
    bool t_json = false;
    table->add_option("--a-list", t_alist, "comma-separated rationals, e.g. 1/2,3/4,1");
    table->add_option("--n", t_n, "evaluate at this n")->required();
    table->add_flag("--json", t_json, "emit the full JSON report");
    table->callback([&] {
        Timer timer;
        rwb_report* rep = nullptr;
        check(rwb_asymptotic_table(t_alist.c_str(), t_n, &rep), "table");
        json params{{"a_list", t_alist}, {"n", t_n}};
        if (t_json) {
            std::exit(emit_report(g, "table", params, rep, timer.seconds()));
        }
        json result = json::parse(rwb_report_json(rep));
        rwb_report_free(rep);
        std::printf("%-10s %-14s %-16s %-18s %s\n", "a", "floor(an)", "lower_bound",
                    "main_term*n", "relative_gap");
        for (const auto& row : result["rows"]) {
            std::string main = row["main_term_times_n"].is_null()
                                   ? "-"
                                   : row["main_term_times_n"].get<std::string>();
            std::string gap = row["relative_gap"].is_null()
                                  ? "-"
                                  : row["relative_gap"].get<std::string>();
            std::printf("%-10s %-14lld %-16lld %-18s %s\n",
                        row["a"].get<std::string>().c_str(),
                        row["floor_an"].get<long long>(),
                        row["lower_bound"].get<long long>(), main.c_str(), gap.c_str());
        }
        std::exit(0);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }
    return 0;
}
