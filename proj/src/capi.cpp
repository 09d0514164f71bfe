#include "ramsey/workbench.h"

#include <cstring>
#include <string>

#include <json.hpp>

#include "coloring.hpp"
#include "constructions.hpp"
#include "cycles.hpp"
#include "error.hpp"
#include "graph.hpp"
#include "lemma_lab.hpp"
#include "matching.hpp"
#include "rational.hpp"
#include "search.hpp"

using nlohmann::json;

struct rwb_graph {
    ramsey::SimpleGraph g;
};
struct rwb_coloring {
    ramsey::TwoColoring c;
};
struct rwb_report {
    std::string text;
    int exit_code = 0;
};

namespace {

thread_local std::string g_last_error;

rwb_status map_errc(ramsey::Errc c) {
    switch (c) {
        case ramsey::Errc::invalid_argument: return RWB_ERROR_INVALID_ARGUMENT;
        case ramsey::Errc::parse: return RWB_ERROR_PARSE;
        case ramsey::Errc::regime: return RWB_ERROR_REGIME;
        case ramsey::Errc::size_limit: return RWB_ERROR_SIZE_LIMIT;
        case ramsey::Errc::budget_exhausted: return RWB_ERROR_BUDGET_EXHAUSTED;
        case ramsey::Errc::io: return RWB_ERROR_IO;
        case ramsey::Errc::inconsistent: return RWB_ERROR_INCONSISTENT;
        case ramsey::Errc::unsupported: return RWB_ERROR_UNSUPPORTED;
    }
    return RWB_ERROR_INTERNAL;
}

template <class Fn>
rwb_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return RWB_OK;
    } catch (const ramsey::Error& e) {
        g_last_error = e.what();
        return map_errc(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return RWB_ERROR_INTERNAL;
    }
}

rwb_report* make_report(json payload, int exit_code) {
    auto* r = new rwb_report;
    r->text = payload.dump();
    r->exit_code = exit_code;
    return r;
}

json witness_entry(const std::string& kind, const std::string& encoding, json data) {
    return json{{"kind", kind}, {"encoding", encoding}, {"data", std::move(data)}};
}

json cycle_json(const ramsey::CycleEmbedding& c) { return json(c.vertices); }

json fan_json(const ramsey::FanEmbedding& f) {
    json blades = json::array();
    for (auto [x, y] : f.blades) blades.push_back(json::array({x, y}));
    return json{{"center", f.center}, {"blades", std::move(blades)}};
}

json certificate_json(const ramsey::Certificate& cert) {
    json comps = json::array();
    for (const auto& rc : cert.red_components) {
        json e{{"size", rc.size}, {"structure", rc.structure}};
        if (rc.circumference >= 0)
            e["circumference"] = rc.circumference;
        else
            e["circumference"] = nullptr;
        comps.push_back(std::move(e));
    }
    const char* verdict = cert.verdict == ramsey::Verdict::avoids ? "avoids"
                          : cert.verdict == ramsey::Verdict::contains_red_cycle
                              ? "contains-red-cycle"
                              : "contains-blue-fan";
    json witnesses = json::array();
    if (cert.red_cycle)
        witnesses.push_back(witness_entry("red-cycle", "vertex-list", cycle_json(*cert.red_cycle)));
    if (cert.blue_fan)
        witnesses.push_back(witness_entry("blue-fan", "center-blades", fan_json(*cert.blue_fan)));
    json out{{"verdict", verdict},
             {"n", cert.n},
             {"target_cycle", cert.target_cycle},
             {"target_fan", cert.target_fan},
             {"red_components", std::move(comps)},
             {"red_path", cert.red_path},
             {"blue_path", cert.blue_path},
             {"max_blue_blades", cert.max_blades},
             {"blade_counts", cert.blade_counts},
             {"witnesses", std::move(witnesses)}};
    return out;
}

json search_report_json(const ramsey::SearchReport& rep) {
    json q;
    if (rep.question.kind == ramsey::SearchQuestion::Kind::arrows)
        q = json{{"kind", "arrows"},
                 {"n", rep.question.n},
                 {"cycle", rep.question.cycle},
                 {"fan", rep.question.fan}};
    else
        q = json{{"kind", "exact"},
                 {"cycle", rep.question.cycle},
                 {"fan", rep.question.fan},
                 {"max_n", rep.question.max_n}};
    const char* result = nullptr;
    switch (rep.outcome) {
        case ramsey::SearchOutcome::arrows: result = "arrows"; break;
        case ramsey::SearchOutcome::good_coloring: result = "good-coloring-found"; break;
        case ramsey::SearchOutcome::exact_value: result = "exact"; break;
        case ramsey::SearchOutcome::budget_exhausted: result = "budget-exhausted"; break;
    }
    json witnesses = json::array();
    if (rep.witness)
        witnesses.push_back(
            witness_entry("good-coloring", "ramsey-coloring-v1", rep.witness->format()));
    json out{{"question", std::move(q)},
             {"result", result},
             {"nodes_expanded", rep.nodes_expanded},
             {"wall_seconds", rep.wall_seconds},
             {"order", json{{"split_vertex", rep.split_vertex},
                            {"pruning", rep.pruning},
                            {"threads", rep.threads}}},
             {"branches", json{{"total", rep.branches_total},
                               {"completed", rep.branches_completed}}},
             {"witnesses", std::move(witnesses)}};
    if (rep.budget_seconds >= 0)
        out["budget_seconds"] = rep.budget_seconds;
    else
        out["budget_seconds"] = nullptr;
    if (rep.outcome == ramsey::SearchOutcome::exact_value) out["value"] = rep.value;
    if (!rep.checkpoint_written.empty()) out["checkpoint"] = rep.checkpoint_written;
    return out;
}

ramsey::VertexSet to_set(const int* data, size_t len) {
    ramsey::VertexSet s(data, data + len);
    return s;
}

// Violating inputs are impossible for correct code; when a checker does flag
// one, the offending graphs ride along for post-mortem.
void attach_violation_artifacts(json& payload,
                                std::initializer_list<std::pair<const char*,
                                                                const ramsey::SimpleGraph*>>
                                    graphs) {
    json art;
    for (auto [name, g] : graphs) art[name] = ramsey::write_graph6(*g);
    payload["artifacts"] = std::move(art);
}

}  // namespace

extern "C" {

const char* rwb_version(void) { return "1.0.0"; }

const char* rwb_status_name(rwb_status status) {
    switch (status) {
        case RWB_OK: return "ok";
        case RWB_ERROR_INVALID_ARGUMENT: return "invalid-argument";
        case RWB_ERROR_PARSE: return "parse-error";
        case RWB_ERROR_REGIME: return "regime-violation";
        case RWB_ERROR_SIZE_LIMIT: return "size-limit";
        case RWB_ERROR_BUDGET_EXHAUSTED: return "budget-exhausted";
        case RWB_ERROR_IO: return "io-error";
        case RWB_ERROR_INCONSISTENT: return "internal-inconsistency";
        case RWB_ERROR_UNSUPPORTED: return "unsupported";
        case RWB_ERROR_INTERNAL: return "internal-error";
    }
    return "unknown";
}

const char* rwb_last_error(void) { return g_last_error.c_str(); }

void rwb_string_free(char* s) { delete[] s; }
void rwb_graph_free(rwb_graph* g) { delete g; }
void rwb_coloring_free(rwb_coloring* c) { delete c; }
void rwb_report_free(rwb_report* r) { delete r; }

static char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

rwb_status rwb_graph_from_graph6(const char* text, rwb_graph** out) {
    return guarded([&] {
        ramsey::require(text && out, ramsey::Errc::invalid_argument, "null argument");
        *out = new rwb_graph{ramsey::parse_graph6(text)};
    });
}

rwb_status rwb_graph_to_graph6(const rwb_graph* g, char** out) {
    return guarded([&] {
        ramsey::require(g && out, ramsey::Errc::invalid_argument, "null argument");
        *out = dup_string(ramsey::write_graph6(g->g));
    });
}

rwb_status rwb_graph_complete(int n, rwb_graph** out) {
    return guarded([&] {
        ramsey::require(out != nullptr, ramsey::Errc::invalid_argument, "null argument");
        *out = new rwb_graph{ramsey::SimpleGraph::complete(n)};
    });
}

rwb_status rwb_graph_from_edges(int n, const int* endpoints, size_t edge_count,
                                rwb_graph** out) {
    return guarded([&] {
        ramsey::require(out && (endpoints || edge_count == 0), ramsey::Errc::invalid_argument,
                        "null argument");
        ramsey::GraphBuilder b(n);
        for (size_t i = 0; i < edge_count; ++i)
            b.add_edge(endpoints[2 * i], endpoints[2 * i + 1]);
        *out = new rwb_graph{std::move(b).build()};
    });
}

rwb_status rwb_graph_complement(const rwb_graph* g, rwb_graph** out) {
    return guarded([&] {
        ramsey::require(g && out, ramsey::Errc::invalid_argument, "null argument");
        *out = new rwb_graph{ramsey::complement(g->g)};
    });
}

int rwb_graph_order(const rwb_graph* g) { return g ? g->g.order() : -1; }

long long rwb_graph_edge_count(const rwb_graph* g) { return g ? g->g.edge_count() : -1; }

int rwb_graph_has_edge(const rwb_graph* g, int u, int v) {
    if (!g || u < 0 || v < 0 || u >= g->g.order() || v >= g->g.order() || u == v) return -1;
    return g->g.adjacent(u, v) ? 1 : 0;
}

rwb_status rwb_coloring_from_red(const rwb_graph* red, rwb_coloring** out) {
    return guarded([&] {
        ramsey::require(red && out, ramsey::Errc::invalid_argument, "null argument");
        *out = new rwb_coloring{ramsey::TwoColoring(red->g)};
    });
}

rwb_status rwb_coloring_parse(const char* text, rwb_coloring** out) {
    return guarded([&] {
        ramsey::require(text && out, ramsey::Errc::invalid_argument, "null argument");
        *out = new rwb_coloring{ramsey::TwoColoring::parse(text)};
    });
}

rwb_status rwb_coloring_format(const rwb_coloring* c, char** out) {
    return guarded([&] {
        ramsey::require(c && out, ramsey::Errc::invalid_argument, "null argument");
        *out = dup_string(c->c.format());
    });
}

rwb_status rwb_coloring_read_file(const char* path, rwb_coloring** out) {
    return guarded([&] {
        ramsey::require(path && out, ramsey::Errc::invalid_argument, "null argument");
        *out = new rwb_coloring{ramsey::TwoColoring::read_file(path)};
    });
}

rwb_status rwb_coloring_write_file(const rwb_coloring* c, const char* path) {
    return guarded([&] {
        ramsey::require(c && path, ramsey::Errc::invalid_argument, "null argument");
        c->c.write_file(path);
    });
}

int rwb_coloring_order(const rwb_coloring* c) { return c ? c->c.order() : -1; }

rwb_status rwb_coloring_red_graph(const rwb_coloring* c, rwb_graph** out) {
    return guarded([&] {
        ramsey::require(c && out, ramsey::Errc::invalid_argument, "null argument");
        *out = new rwb_graph{c->c.red()};
    });
}

rwb_status rwb_coloring_blue_graph(const rwb_coloring* c, rwb_graph** out) {
    return guarded([&] {
        ramsey::require(c && out, ramsey::Errc::invalid_argument, "null argument");
        *out = new rwb_graph{c->c.blue()};
    });
}

rwb_status rwb_floor_an(long long a_num, long long a_den, long long n, long long* out) {
    return guarded([&] {
        ramsey::require(out != nullptr, ramsey::Errc::invalid_argument, "null argument");
        *out = ramsey::floor_an(ramsey::Rational(a_num, a_den), n);
    });
}

rwb_status rwb_lower_bound_value(long long a_num, long long a_den, long long n,
                                 long long* out) {
    return guarded([&] {
        ramsey::require(out != nullptr, ramsey::Errc::invalid_argument, "null argument");
        *out = ramsey::lower_bound_value(ramsey::Rational(a_num, a_den), n);
    });
}

rwb_status rwb_asymptotic_main_term(long long a_num, long long a_den, long long* out_num,
                                    long long* out_den) {
    return guarded([&] {
        ramsey::require(out_num && out_den, ramsey::Errc::invalid_argument, "null argument");
        ramsey::Rational r = ramsey::asymptotic_main_term(ramsey::Rational(a_num, a_den));
        *out_num = r.num;
        *out_den = r.den;
    });
}

static ramsey::ConstructionSpec make_spec(const char* family, long long a_num,
                                          long long a_den, long long n) {
    ramsey::require(family != nullptr, ramsey::Errc::invalid_argument, "null family");
    ramsey::ConstructionSpec spec;
    spec.family = ramsey::family_from_string(family);
    if (spec.family != ramsey::Family::W5) spec.a = ramsey::Rational(a_num, a_den);
    spec.n = n;
    return spec;
}

rwb_status rwb_build_witness(const char* family, long long a_num, long long a_den,
                             long long n, rwb_coloring** out) {
    return guarded([&] {
        ramsey::require(out != nullptr, ramsey::Errc::invalid_argument, "null argument");
        *out = new rwb_coloring{ramsey::build_witness(make_spec(family, a_num, a_den, n))};
    });
}

rwb_status rwb_witness_targets(const char* family, long long a_num, long long a_den,
                               long long n, int* out_cycle, int* out_fan) {
    return guarded([&] {
        ramsey::require(out_cycle && out_fan, ramsey::Errc::invalid_argument, "null argument");
        auto [cycle, fan] = ramsey::witness_targets(make_spec(family, a_num, a_den, n));
        *out_cycle = cycle;
        *out_fan = fan;
    });
}

rwb_status rwb_witness_lower_bound(const char* family, long long a_num, long long a_den,
                                   long long n, long long* out) {
    return guarded([&] {
        ramsey::require(out != nullptr, ramsey::Errc::invalid_argument, "null argument");
        *out = ramsey::witness_lower_bound(make_spec(family, a_num, a_den, n));
    });
}

rwb_status rwb_verify_coloring(const rwb_coloring* c, int cycle_len, int fan_blades,
                               rwb_report** out) {
    return guarded([&] {
        ramsey::require(c && out, ramsey::Errc::invalid_argument, "null argument");
        ramsey::Certificate cert = ramsey::verify_witness(c->c, cycle_len, fan_blades);
        *out = make_report(certificate_json(cert),
                           cert.verdict == ramsey::Verdict::avoids ? 0 : 2);
    });
}

rwb_status rwb_literature_value(const char* family, long long n, long long m,
                                rwb_report** out) {
    return guarded([&] {
        ramsey::require(family && out, ramsey::Errc::invalid_argument, "null argument");
        ramsey::LiteratureResult lit = ramsey::literature_value(family, n, m);
        *out = make_report(json{{"family", lit.family},
                                {"value", lit.value},
                                {"condition", lit.condition},
                                {"asymptotic_only", lit.asymptotic_only}},
                           0);
    });
}

rwb_status rwb_asymptotic_table(const char* a_list_csv, long long n, rwb_report** out) {
    return guarded([&] {
        ramsey::require(a_list_csv && out, ramsey::Errc::invalid_argument, "null argument");
        std::vector<ramsey::Rational> as;
        std::string_view sv(a_list_csv);
        while (!sv.empty()) {
            auto comma = sv.find(',');
            std::string_view tok = comma == std::string_view::npos ? sv : sv.substr(0, comma);
            sv = comma == std::string_view::npos ? std::string_view{} : sv.substr(comma + 1);
            if (!tok.empty()) as.push_back(ramsey::Rational::parse(tok));
        }
        auto rows = ramsey::asymptotic_table(as, n);
        json jrows = json::array();
        for (const auto& r : rows) {
            json e{{"a", r.a.str()},
                   {"floor_an", r.floor_an},
                   {"lower_bound", r.lower_bound}};
            if (r.main_term_times_n) {
                e["main_term_times_n"] = r.main_term_times_n->str();
                e["relative_gap"] = r.relative_gap->str();
                e["relative_gap_decimal"] = r.relative_gap->approx();
            } else {
                e["main_term_times_n"] = nullptr;
                e["relative_gap"] = nullptr;
                e["relative_gap_decimal"] = nullptr;
            }
            jrows.push_back(std::move(e));
        }
        *out = make_report(json{{"n", n}, {"rows", std::move(jrows)}}, 0);
    });
}

rwb_status rwb_star_matching_ramsey(int k, int n1, int n2, int interpret_k_above_n1,
                                    long long* out) {
    return guarded([&] {
        ramsey::require(out != nullptr, ramsey::Errc::invalid_argument, "null argument");
        *out = ramsey::star_matching_ramsey(k, n1, n2, interpret_k_above_n1 != 0);
    });
}

rwb_status rwb_detect_cycle(const rwb_graph* g, int length_or_zero, int allow_heuristic,
                            rwb_report** out) {
    return guarded([&] {
        ramsey::require(g && out, ramsey::Errc::invalid_argument, "null argument");
        json payload{{"kind", "cycle"}, {"n", g->g.order()}};
        ramsey::CircumferenceResult circ =
            ramsey::circumference(g->g, {allow_heuristic != 0});
        payload["circumference"] = circ.length;
        payload["exact"] = circ.exact;
        json witnesses = json::array();
        if (length_or_zero > 0) {
            payload["length_query"] = length_or_zero;
            auto c = ramsey::has_cycle_of_length(g->g, length_or_zero);
            payload["found"] = bool(c);
            if (c)
                witnesses.push_back(witness_entry("cycle", "vertex-list", cycle_json(*c)));
        } else if (circ.cycle) {
            witnesses.push_back(
                witness_entry("cycle", "vertex-list", cycle_json(*circ.cycle)));
        }
        payload["witnesses"] = std::move(witnesses);
        *out = make_report(std::move(payload), 0);
    });
}

rwb_status rwb_detect_fan(const rwb_graph* g, int blades_or_zero, rwb_report** out) {
    return guarded([&] {
        ramsey::require(g && out, ramsey::Errc::invalid_argument, "null argument");
        json payload{{"kind", "fan"}, {"n", g->g.order()}};
        int best = 0, center = -1;
        for (int v = 0; v < g->g.order(); ++v) {
            int b = ramsey::fan_blades_count(g->g, v);
            if (b > best) {
                best = b;
                center = v;
            }
        }
        payload["max_blades"] = best;
        json witnesses = json::array();
        if (blades_or_zero > 0) {
            payload["blades_query"] = blades_or_zero;
            auto fan = ramsey::find_fan(g->g, blades_or_zero);
            payload["found"] = bool(fan);
            if (fan)
                witnesses.push_back(witness_entry("fan", "center-blades", fan_json(*fan)));
        } else if (center >= 0) {
            auto [count, fan] = ramsey::max_fan_blades(g->g, center);
            (void)count;
            witnesses.push_back(witness_entry("fan", "center-blades", fan_json(fan)));
        }
        payload["witnesses"] = std::move(witnesses);
        *out = make_report(std::move(payload), 0);
    });
}

rwb_status rwb_detect_connected_matching(const rwb_graph* g, rwb_report** out) {
    return guarded([&] {
        ramsey::require(g && out, ramsey::Errc::invalid_argument, "null argument");
        ramsey::ConnectedMatching cm = ramsey::connected_matching_number(g->g);
        *out = make_report(json{{"kind", "connected-matching"},
                                {"n", g->g.order()},
                                {"size", cm.size},
                                {"component", cm.component}},
                           0);
    });
}

rwb_status rwb_max_matching(const rwb_graph* g, rwb_report** out) {
    return guarded([&] {
        ramsey::require(g && out, ramsey::Errc::invalid_argument, "null argument");
        ramsey::Matching m = ramsey::max_matching(g->g);
        json edges = json::array();
        for (auto [u, v] : m.edges) edges.push_back(json::array({u, v}));
        *out = make_report(json{{"kind", "max-matching"},
                                {"n", g->g.order()},
                                {"size", m.size()},
                                {"edges", std::move(edges)}},
                           0);
    });
}

rwb_status rwb_berge_deficiency(const rwb_graph* g, rwb_report** out) {
    return guarded([&] {
        ramsey::require(g && out, ramsey::Errc::invalid_argument, "null argument");
        ramsey::DeficiencyWitness d = ramsey::berge_deficiency(g->g);
        *out = make_report(json{{"kind", "berge-deficiency"},
                                {"n", g->g.order()},
                                {"deficiency", d.deficiency},
                                {"witness_set", d.witness_set}},
                           0);
    });
}

rwb_status rwb_search_arrows(int n, int cycle_len, int fan_blades, double budget_seconds,
                             int threads, int enable_pruning, const char* resume_path,
                             const char* checkpoint_path, rwb_report** out) {
    return guarded([&] {
        ramsey::require(out != nullptr, ramsey::Errc::invalid_argument, "null argument");
        ramsey::SearchOptions opts;
        opts.budget_seconds = budget_seconds;
        opts.threads = threads;
        opts.pruning = enable_pruning != 0;
        if (resume_path) opts.resume_path = resume_path;
        if (checkpoint_path) opts.checkpoint_path = checkpoint_path;
        ramsey::SearchReport rep = ramsey::arrows_search(n, cycle_len, fan_blades, opts);
        int exit_code = rep.outcome == ramsey::SearchOutcome::budget_exhausted ? 3 : 0;
        *out = make_report(search_report_json(rep), exit_code);
    });
}

rwb_status rwb_search_exact(int cycle_len, int fan_blades, int max_n, double budget_seconds,
                            int threads, rwb_report** out) {
    return guarded([&] {
        ramsey::require(out != nullptr, ramsey::Errc::invalid_argument, "null argument");
        ramsey::SearchOptions opts;
        opts.budget_seconds = budget_seconds;
        opts.threads = threads;
        ramsey::SearchReport rep =
            ramsey::ramsey_exact_search(cycle_len, fan_blades, max_n, opts);
        int exit_code = rep.outcome == ramsey::SearchOutcome::budget_exhausted ? 3 : 0;
        *out = make_report(search_report_json(rep), exit_code);
    });
}

rwb_status rwb_random_audit(int n, int cycle_len, int fan_blades,
                            unsigned long long samples, unsigned long long seed,
                            int exhaustive, rwb_report** out) {
    return guarded([&] {
        ramsey::require(out != nullptr, ramsey::Errc::invalid_argument, "null argument");
        ramsey::AuditReport rep =
            ramsey::random_coloring_audit(n, cycle_len, fan_blades, samples, seed,
                                          exhaustive != 0);
        json witnesses = json::array();
        for (const auto& w : rep.counterexamples)
            witnesses.push_back(
                witness_entry("good-coloring", "ramsey-coloring-v1", w.format()));
        *out = make_report(json{{"kind", "random-audit"},
                                {"n", rep.n},
                                {"cycle", rep.cycle},
                                {"fan", rep.fan},
                                {"samples", rep.samples},
                                {"seed", rep.seed},
                                {"exhaustive", rep.exhaustive},
                                {"with_red_cycle", rep.with_red_cycle},
                                {"with_blue_fan", rep.with_blue_fan},
                                {"with_either", rep.with_either},
                                {"good_colorings", rep.good_colorings},
                                {"fraction", rep.fraction()},
                                {"witnesses", std::move(witnesses)}},
                           rep.good_colorings > 0 ? 2 : 0);
    });
}

rwb_status rwb_lemma_component(const rwb_graph* host, const rwb_graph* red,
                               rwb_report** out) {
    return guarded([&] {
        ramsey::require(host && red && out, ramsey::Errc::invalid_argument, "null argument");
        ramsey::PartialTwoColoring pc(host->g, red->g);
        ramsey::ComponentLemmaReport rep = ramsey::check_component_lemma(pc);
        json payload{{"kind", "component-lemma"},
                     {"hypothesis_met", rep.hypothesis_met},
                     {"note", rep.note},
                     {"n", rep.n},
                     {"min_degree", rep.min_degree},
                     {"color", rep.color},
                     {"component", rep.component},
                     {"component_order", rep.component.size()},
                     {"violated", rep.violated}};
        if (rep.violated)
            attach_violation_artifacts(payload, {{"host", &host->g}, {"red", &red->g}});
        *out = make_report(std::move(payload), rep.violated ? 4 : 0);
    });
}

rwb_status rwb_lemma_figaj_luczak(const rwb_graph* g, const int* part1, size_t part1_len,
                                  const int* part2, size_t part2_len, long long eps_num,
                                  long long eps_den, rwb_report** out) {
    return guarded([&] {
        ramsey::require(g && out && (part1 || part1_len == 0) && (part2 || part2_len == 0),
                        ramsey::Errc::invalid_argument, "null argument");
        ramsey::FigajLuczakReport rep =
            ramsey::check_figaj_luczak(g->g, to_set(part1, part1_len),
                                       to_set(part2, part2_len),
                                       ramsey::Rational(eps_num, eps_den));
        json payload{{"kind", "figaj-luczak"},
                     {"hypothesis_met", rep.hypothesis_met},
                     {"note", rep.note},
                     {"eps", rep.eps.str()},
                     {"edges", rep.edges},
                     {"required_edges", rep.required_edges},
                     {"component_threshold", rep.component_threshold},
                     {"matching_threshold", rep.matching_threshold},
                     {"component_order", rep.component.size()},
                     {"matching_size", rep.matching_size},
                     {"violated", rep.violated}};
        if (rep.violated) attach_violation_artifacts(payload, {{"graph", &g->g}});
        *out = make_report(std::move(payload), rep.violated ? 4 : 0);
    });
}

rwb_status rwb_lemma_star_matching(int k, int n1, int n2, double budget_seconds,
                                   rwb_report** out) {
    return guarded([&] {
        ramsey::require(out != nullptr, ramsey::Errc::invalid_argument, "null argument");
        ramsey::StarMatchingReport rep =
            ramsey::check_star_matching_small(k, n1, n2, budget_seconds);
        *out = make_report(json{{"kind", "star-matching"},
                                {"k", rep.k},
                                {"n1", rep.n1},
                                {"n2", rep.n2},
                                {"formula_value", rep.formula_value},
                                {"arrows_at_value", rep.arrows_at_value},
                                {"good_coloring_below", rep.good_coloring_below},
                                {"nodes", rep.nodes},
                                {"violated", rep.violated}},
                           rep.violated ? 4 : 0);
    });
}

rwb_status rwb_lemma_dirac(const rwb_graph* g, rwb_report** out) {
    return guarded([&] {
        ramsey::require(g && out, ramsey::Errc::invalid_argument, "null argument");
        ramsey::DiracReport rep = ramsey::check_dirac(g->g);
        json payload{{"kind", "dirac"},
                     {"hypothesis_met", rep.hypothesis_met},
                     {"note", rep.hypothesis_note},
                     {"min_degree", rep.min_degree},
                     {"bound", rep.bound},
                     {"circumference", rep.circumference},
                     {"holds", rep.holds}};
        json witnesses = json::array();
        if (rep.witness)
            witnesses.push_back(witness_entry("cycle", "vertex-list", cycle_json(*rep.witness)));
        payload["witnesses"] = std::move(witnesses);
        bool violated = rep.hypothesis_met && !rep.holds;
        if (violated) attach_violation_artifacts(payload, {{"graph", &g->g}});
        *out = make_report(std::move(payload), violated ? 4 : 0);
    });
}

rwb_status rwb_lemma_bondy(const rwb_graph* g, rwb_report** out) {
    return guarded([&] {
        ramsey::require(g && out, ramsey::Errc::invalid_argument, "null argument");
        ramsey::BondyReport rep = ramsey::check_bondy(g->g);
        const char* verdict =
            rep.verdict == ramsey::BondyVerdict::pancyclic         ? "pancyclic"
            : rep.verdict == ramsey::BondyVerdict::exception_krr   ? "exception-K_rr"
            : rep.verdict == ramsey::BondyVerdict::hypothesis_not_met ? "hypothesis-not-met"
                                                                      : "violated";
        json payload{{"kind", "bondy"},
                     {"verdict", verdict},
                     {"min_degree", rep.min_degree},
                     {"spectrum", std::vector<int>(rep.spectrum.begin(), rep.spectrum.end())}};
        if (rep.verdict == ramsey::BondyVerdict::violated)
            attach_violation_artifacts(payload, {{"graph", &g->g}});
        *out = make_report(std::move(payload),
                           rep.verdict == ramsey::BondyVerdict::violated ? 4 : 0);
    });
}

rwb_status rwb_lemma_dirac_chain(const rwb_graph* g, rwb_report** out) {
    return guarded([&] {
        ramsey::require(g && out, ramsey::Errc::invalid_argument, "null argument");
        ramsey::DiracChainReport rep = ramsey::dirac_chain_check(g->g);
        json payload{{"kind", "dirac-chain"},
                     {"two_connected", rep.two_connected},
                     {"min_degree", rep.min_degree},
                     {"bound", rep.bound},
                     {"circumference", rep.circumference},
                     {"connected_matching", rep.connected_matching},
                     {"dirac_holds", rep.dirac_holds},
                     {"matching_bound_holds", rep.matching_bound_holds},
                     {"violated", rep.violated}};
        if (rep.violated) attach_violation_artifacts(payload, {{"graph", &g->g}});
        *out = make_report(std::move(payload), rep.violated ? 4 : 0);
    });
}

rwb_status rwb_claims_audit(const rwb_graph* host, const rwb_graph* red, long long a_num,
                            long long a_den, long long beta_num, long long beta_den,
                            const char* regime, int max_defect, rwb_report** out) {
    return guarded([&] {
        ramsey::require(host && red && regime && out, ramsey::Errc::invalid_argument,
                        "null argument");
        std::string r(regime);
        ramsey::ClaimsRegime reg;
        if (r == "partI" || r == "part-one")
            reg = ramsey::ClaimsRegime::part_one;
        else if (r == "partII" || r == "part-two")
            reg = ramsey::ClaimsRegime::part_two;
        else
            ramsey::fail(ramsey::Errc::invalid_argument,
                         "regime must be partI or partII, got '" + r + "'");
        ramsey::PartialTwoColoring pc(host->g, red->g);
        ramsey::ClaimsAudit audit =
            ramsey::claims_audit(pc, ramsey::Rational(a_num, a_den),
                                 ramsey::Rational(beta_num, beta_den), reg, max_defect);
        json evals = json::array();
        for (const auto& e : audit.evaluations)
            evals.push_back(json{{"name", e.name},
                                 {"threshold", e.threshold},
                                 {"quantity", e.quantity},
                                 {"satisfied", e.satisfied}});
        json payload{{"kind", "claims-audit"},
                     {"t", audit.t},
                     {"max_red_connected_matching", audit.max_red_connected_matching},
                     {"max_blue_fan_blades", audit.max_blue_fan_blades},
                     {"min_red_degree", audit.min_red_degree},
                     {"red_two_connected", audit.red_two_connected},
                     {"evaluations", std::move(evals)}};
        if (audit.red_circumference >= 0)
            payload["red_circumference"] = audit.red_circumference;
        else
            payload["red_circumference"] = nullptr;
        *out = make_report(std::move(payload), 0);
    });
}

const char* rwb_report_json(const rwb_report* r) { return r ? r->text.c_str() : ""; }

int rwb_report_exit_code(const rwb_report* r) { return r ? r->exit_code : 1; }

}  // extern "C"
