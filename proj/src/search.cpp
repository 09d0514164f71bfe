#include "search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <chrono>
#include <climits>
#include <fstream>
#include <random>
#include <thread>

#include <json.hpp>

#include "constructions.hpp"
#include "cycles.hpp"
#include "matching.hpp"

namespace ramsey {

namespace {

using Clock = std::chrono::steady_clock;

// ---------------------------------------------------------------------------
// Symmetry pruning tables: all permutations of {0..6}, and for each k <= 7 the
// subgroup fixing {k..6} pointwise (i.e. S_k on the first k vertices).
// ---------------------------------------------------------------------------

struct PermTable {
    std::vector<std::array<std::int8_t, 7>> perms;
    std::array<std::vector<std::uint16_t>, 8> group;

    PermTable() {
        std::array<std::int8_t, 7> p{0, 1, 2, 3, 4, 5, 6};
        do {
            perms.push_back(p);
        } while (std::next_permutation(p.begin(), p.end()));
        for (int k = 1; k <= 7; ++k) {
            for (std::uint16_t i = 0; i < perms.size(); ++i) {
                bool fixes_rest = true;
                for (int j = k; j < 7; ++j)
                    if (perms[i][j] != j) fixes_rest = false;
                if (fixes_rest) group[k].push_back(i);
            }
        }
    }
};

const PermTable& perm_table() {
    static PermTable t;
    return t;
}

struct BranchResult {
    bool completed = false;
    bool skipped = false;
    std::uint64_t nodes = 0;
    std::optional<std::vector<std::uint64_t>> witness_red;
};

// DFS over colorings by vertex-extension order. Edge colors at the current
// vertex are assigned red-first (red sorts below blue), so the first full
// survivor is the lexicographically least good coloring; symmetry pruning
// only removes colorings with a lex-smaller image under a permutation of the
// first min(n,7) vertices, which that least survivor never has.
struct Engine {
    int n = 0, m = 3, fan = 1;
    bool pruning = true;
    std::array<std::uint64_t, kMaxSearchVertices> red{}, blue{};
    std::array<std::vector<std::uint16_t>, kMaxSearchVertices> active;
    std::uint64_t nodes = 0;
    int collect_until = 0;  // when > 0, snapshot instead of descending there
    std::vector<std::pair<std::array<std::uint64_t, kMaxSearchVertices>,
                          std::array<std::uint64_t, kMaxSearchVertices>>>* collector = nullptr;
    std::optional<std::vector<std::uint64_t>> witness;
    // abort plumbing
    const std::atomic<bool>* stop_flag = nullptr;
    Clock::time_point deadline{};
    bool has_deadline = false;
    bool aborted = false;

    int color_of(int u, int v) const { return int((blue[u] >> v) & 1); }
    bool colored_red(int u, int v) const { return (red[u] >> v) & 1; }

    bool check_abort() {
        if ((nodes & 0xFFF) != 0) return false;
        if (stop_flag && stop_flag->load(std::memory_order_relaxed)) aborted = true;
        if (has_deadline && Clock::now() >= deadline) aborted = true;
        return aborted;
    }

    // Simple red cycle of length exactly m through vertex `start`.
    bool red_cycle_through_rec(int start, int v, int depth, std::uint64_t visited) {
        if (depth == m - 1) return (red[v] >> start) & 1;
        std::uint64_t cand = red[v] & ~visited;
        while (cand) {
            int w = std::countr_zero(cand);
            cand &= cand - 1;
            if (red_cycle_through_rec(start, w, depth + 1, visited | (1ull << w))) return true;
        }
        return false;
    }

    bool has_red_cycle_through(int v) {
        if (std::popcount(red[v]) < 2) return false;
        return red_cycle_through_rec(v, v, 0, 1ull << v);
    }

    bool blue_matching_at_least(std::uint64_t allowed, int t) {
        if (t <= 0) return true;
        while (allowed) {
            int v = std::countr_zero(allowed);
            std::uint64_t nb = blue[v] & allowed & ~(1ull << v);
            if (!nb) {
                allowed &= ~(1ull << v);
                continue;
            }
            std::uint64_t rest = allowed & ~(1ull << v);
            while (nb) {
                int w = std::countr_zero(nb);
                nb &= nb - 1;
                if (blue_matching_at_least(rest & ~(1ull << w), t - 1)) return true;
            }
            return blue_matching_at_least(rest, t);  // leave v unmatched
        }
        return false;
    }

    // Only fans touching the newly completed vertex can be new: its centers
    // are the vertex itself and its blue neighbors.
    bool has_blue_fan_touching(int i) {
        std::uint64_t centers = blue[i] | (1ull << i);
        while (centers) {
            int c = std::countr_zero(centers);
            centers &= centers - 1;
            std::uint64_t nb = blue[c];
            if (std::popcount(nb) >= 2 * fan && blue_matching_at_least(nb, fan)) return true;
        }
        return false;
    }

    // -1: some permutation image is lex-smaller (prune); 0 kept.
    int compare_perm_prefix(const std::array<std::int8_t, 7>& p, int i) const {
        for (int v = 1; v <= i; ++v) {
            for (int u = 0; u < v; ++u) {
                int c = color_of(u, v);
                int cp = color_of(p[u], p[v]);
                if (cp != c) return cp < c ? -1 : 1;
            }
        }
        return 0;
    }

    bool canonical_after(int i) {
        const PermTable& T = perm_table();
        if (i < 1) return true;
        if (i < 6) {
            for (std::uint16_t pi : T.group[i + 1]) {
                if (compare_perm_prefix(T.perms[pi], i) < 0) return false;
            }
            return true;
        }
        if (i == 6) {
            auto& act = active[6];
            act.clear();
            for (std::uint16_t pi : T.group[7]) {
                int cmp = compare_perm_prefix(T.perms[pi], 6);
                if (cmp < 0) return false;
                if (cmp == 0) act.push_back(pi);
            }
            return true;
        }
        const auto& parent = active[i - 1];
        auto& act = active[i];
        act.clear();
        for (std::uint16_t pi : parent) {
            const auto& p = T.perms[pi];
            int cmp = 0;
            for (int u = 0; u < i; ++u) {
                int pu = u < 7 ? p[u] : u;
                int c = color_of(u, i);
                int cp = color_of(pu, i);
                if (cp != c) {
                    cmp = cp < c ? -1 : 1;
                    break;
                }
            }
            if (cmp < 0) return false;
            if (cmp == 0) act.push_back(pi);
        }
        return true;
    }

    // Returns false to unwind the whole search (witness found or aborted).
    bool complete_vertex(int i) {
        ++nodes;
        if (check_abort()) return false;
        if (i > 0) {
            if (has_red_cycle_through(i)) return true;
            if (has_blue_fan_touching(i)) return true;
        }
        if (pruning && !canonical_after(i)) return true;
        if (collector && i + 1 == collect_until) {
            collector->emplace_back(red, blue);
            return true;
        }
        if (i + 1 == n) {
            witness = std::vector<std::uint64_t>(red.begin(), red.begin() + n);
            return false;
        }
        return assign_edges(i + 1, 0);
    }

    bool assign_edges(int i, int j) {
        if (j == i) return complete_vertex(i);
        // red branch (red sorts first)
        bool skip_red = pruning && j == 0 && i >= 2 && color_of(0, i - 1) == 1;
        if (!skip_red) {
            red[j] |= 1ull << i;
            red[i] |= 1ull << j;
            bool closes_triangle = m == 3 && (red[j] & red[i]) != 0;
            if (!closes_triangle) {
                if (!assign_edges(i, j + 1)) return false;
            }
            red[j] &= ~(1ull << i);
            red[i] &= ~(1ull << j);
        }
        // blue branch
        blue[j] |= 1ull << i;
        blue[i] |= 1ull << j;
        bool closes_blade = fan == 1 && (blue[j] & blue[i]) != 0;
        if (!closes_blade) {
            if (!assign_edges(i, j + 1)) return false;
        }
        blue[j] &= ~(1ull << i);
        blue[i] &= ~(1ull << j);
        return true;
    }

    void load(const std::array<std::uint64_t, kMaxSearchVertices>& r,
              const std::array<std::uint64_t, kMaxSearchVertices>& b) {
        red = r;
        blue = b;
    }

    // Runs the search assigning vertices from `from` on; assumes vertices
    // below `from` are fully colored and already checked.
    void run_from(int from) {
        witness.reset();
        aborted = false;
        if (from >= n) {
            // the prefix is already a complete coloring
            witness = std::vector<std::uint64_t>(red.begin(), red.begin() + n);
            return;
        }
        assign_edges(from, 0);
    }
};

TwoColoring coloring_from_masks(int n, const std::vector<std::uint64_t>& red_masks) {
    GraphBuilder b(n);
    for (int v = 0; v < n; ++v)
        for (int u = 0; u < v; ++u)
            if ((red_masks[u] >> v) & 1) b.add_edge(u, v);
    return TwoColoring(std::move(b).build());
}

void validate_good_coloring(const TwoColoring& w, int m, int fan) {
    Certificate cert = verify_witness(w, m, fan);
    require(cert.verdict == Verdict::avoids, Errc::inconsistent,
            "search returned a coloring that fails verification");
    // Restriction closure: deleting any vertex keeps the coloring good.
    for (int drop = 0; drop < w.order(); ++drop) {
        VertexSet keep;
        for (int v = 0; v < w.order(); ++v)
            if (v != drop) keep.push_back(v);
        auto [sub, map] = induced_subgraph(w.red(), keep);
        (void)map;
        Certificate c = verify_witness(TwoColoring(sub), m, fan);
        require(c.verdict == Verdict::avoids, Errc::inconsistent,
                "restriction of a good coloring is not good");
    }
}

struct Frontier {
    SearchQuestion question;
    int split_vertex = 0;
    bool pruning = true;
    std::uint64_t prefix_nodes = 0;
    std::uint64_t branches_total = 0;
    std::vector<BranchResult> completed;  // indexed by branch
};

void write_frontier(const std::string& path, const Frontier& f) {
    nlohmann::json j;
    j["format"] = "RAMSEY-FRONTIER v1";
    j["question"] = {{"kind", "arrows"},
                     {"n", f.question.n},
                     {"cycle", f.question.cycle},
                     {"fan", f.question.fan}};
    j["split_vertex"] = f.split_vertex;
    j["pruning"] = f.pruning;
    j["prefix_nodes"] = f.prefix_nodes;
    j["branches_total"] = f.branches_total;
    nlohmann::json done = nlohmann::json::array();
    for (std::uint64_t i = 0; i < f.completed.size(); ++i) {
        const BranchResult& r = f.completed[i];
        if (!r.completed) continue;
        nlohmann::json e;
        e["index"] = i;
        e["nodes"] = r.nodes;
        if (r.witness_red)
            e["witness_red_graph6"] =
                write_graph6(coloring_from_masks(f.question.n, *r.witness_red).red());
        else
            e["witness_red_graph6"] = nullptr;
        done.push_back(std::move(e));
    }
    j["completed"] = std::move(done);
    std::ofstream out(path, std::ios::binary);
    require(bool(out), Errc::io, "cannot write checkpoint '" + path + "'");
    out << j.dump(2) << "\n";
}

void load_frontier(const std::string& path, const SearchQuestion& q, int split_vertex,
                   bool pruning, std::vector<BranchResult>& results) {
    std::ifstream in(path, std::ios::binary);
    require(bool(in), Errc::io, "cannot open checkpoint '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        fail(Errc::parse, std::string("bad checkpoint: ") + e.what());
    }
    require(j.value("format", "") == "RAMSEY-FRONTIER v1", Errc::parse,
            "unknown checkpoint format");
    auto jq = j.at("question");
    require(jq.value("kind", "") == "arrows" && jq.value("n", -1) == q.n &&
                jq.value("cycle", -1) == q.cycle && jq.value("fan", -1) == q.fan,
            Errc::invalid_argument, "checkpoint was written for a different question");
    require(j.value("split_vertex", -1) == split_vertex &&
                j.value("pruning", !pruning) == pruning,
            Errc::invalid_argument, "checkpoint search parameters do not match");
    require(j.value("branches_total", std::uint64_t(0)) == results.size(), Errc::invalid_argument,
            "checkpoint branch count does not match");
    for (const auto& e : j.at("completed")) {
        std::uint64_t idx = e.at("index").get<std::uint64_t>();
        require(idx < results.size(), Errc::parse, "checkpoint branch index out of range");
        results[idx].completed = true;
        results[idx].nodes = e.at("nodes").get<std::uint64_t>();
        if (!e.at("witness_red_graph6").is_null()) {
            SimpleGraph red = parse_graph6(e.at("witness_red_graph6").get<std::string>());
            std::vector<std::uint64_t> masks(q.n, 0);
            for (auto [u, v] : red.edges()) {
                masks[u] |= 1ull << v;
                masks[v] |= 1ull << u;
            }
            results[idx].witness_red = std::move(masks);
        }
    }
}

}  // namespace

SearchReport arrows_search(int n, int cycle_len, int fan_blades, const SearchOptions& opts) {
    require(n >= 1, Errc::invalid_argument, "need n >= 1");
    require(n <= kMaxSearchVertices, Errc::size_limit,
            "search supports at most " + std::to_string(kMaxSearchVertices) + " vertices");
    require(cycle_len >= 3, Errc::invalid_argument, "cycle length must be at least 3");
    require(fan_blades >= 1, Errc::invalid_argument, "fan needs at least one blade");
    require(opts.threads >= 1, Errc::invalid_argument, "thread count must be positive");
    require(opts.split_vertex >= 2 && opts.split_vertex <= 6, Errc::invalid_argument,
            "split vertex must be between 2 and 6");

    auto t0 = Clock::now();
    SearchReport rep;
    rep.question = {SearchQuestion::Kind::arrows, n, cycle_len, fan_blades, 0};
    rep.budget_seconds = opts.budget_seconds;
    rep.threads = opts.threads;
    rep.pruning = opts.pruning;
    rep.split_vertex = opts.split_vertex;

    const bool has_deadline = opts.budget_seconds >= 0;
    const auto deadline =
        t0 + std::chrono::duration_cast<Clock::duration>(
                 std::chrono::duration<double>(has_deadline ? opts.budget_seconds : 0));

    // Enumerate the surviving prefixes over the first split_vertex vertices.
    int split = n > opts.split_vertex ? opts.split_vertex : 0;
    std::vector<std::pair<std::array<std::uint64_t, kMaxSearchVertices>,
                          std::array<std::uint64_t, kMaxSearchVertices>>>
        branches;
    std::uint64_t prefix_nodes = 0;
    if (split > 0) {
        Engine e;
        e.n = n;
        e.m = cycle_len;
        e.fan = fan_blades;
        e.pruning = opts.pruning;
        e.collect_until = split;
        e.collector = &branches;
        e.run_from(0);
        prefix_nodes = e.nodes;
    } else {
        branches.emplace_back();  // a single empty prefix
    }
    rep.branches_total = branches.size();

    std::vector<BranchResult> results(branches.size());
    if (!opts.resume_path.empty())
        load_frontier(opts.resume_path, rep.question, opts.split_vertex, opts.pruning, results);

    std::atomic<size_t> next{0};
    std::atomic<long long> best_witness{LLONG_MAX};
    std::atomic<bool> out_of_budget{false};

    auto worker = [&]() {
        for (;;) {
            size_t idx = next.fetch_add(1);
            if (idx >= branches.size()) return;
            BranchResult& r = results[idx];
            if (r.completed) {
                if (r.witness_red) {
                    long long cur = best_witness.load();
                    while ((long long)idx < cur &&
                           !best_witness.compare_exchange_weak(cur, (long long)idx)) {
                    }
                }
                continue;
            }
            if ((long long)idx > best_witness.load(std::memory_order_relaxed)) {
                r.skipped = true;
                continue;
            }
            if (out_of_budget.load(std::memory_order_relaxed)) continue;
            if (has_deadline && Clock::now() >= deadline) {
                out_of_budget.store(true);
                continue;
            }
            Engine e;
            e.n = n;
            e.m = cycle_len;
            e.fan = fan_blades;
            e.pruning = opts.pruning;
            e.load(branches[idx].first, branches[idx].second);
            e.has_deadline = has_deadline;
            e.deadline = deadline;
            e.run_from(split);
            if (e.aborted) {
                out_of_budget.store(true);
                continue;
            }
            r.completed = true;
            r.nodes = e.nodes;
            if (e.witness) {
                r.witness_red = std::move(e.witness);
                long long cur = best_witness.load();
                while ((long long)idx < cur &&
                       !best_witness.compare_exchange_weak(cur, (long long)idx)) {
                }
            }
        }
    };

    if (opts.threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < opts.threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    // Canonical aggregation in branch order.
    long long first_witness = -1;
    for (size_t i = 0; i < results.size(); ++i)
        if (results[i].completed && results[i].witness_red) {
            first_witness = (long long)i;
            break;
        }
    bool prefix_complete = true;  // all branches before the first witness done
    std::uint64_t counted_nodes = prefix_nodes;
    std::uint64_t completed_count = 0;
    for (size_t i = 0; i < results.size(); ++i) {
        if (results[i].completed) ++completed_count;
        if (first_witness >= 0 && (long long)i > first_witness) continue;
        if (results[i].completed)
            counted_nodes += results[i].nodes;
        else if (first_witness < 0 || (long long)i < first_witness)
            prefix_complete = false;
    }
    rep.branches_completed = completed_count;

    if (first_witness >= 0) {
        rep.outcome = SearchOutcome::good_coloring;
        rep.witness = coloring_from_masks(n, *results[first_witness].witness_red);
        rep.nodes_expanded = counted_nodes;
        if (n <= kExactCycleComponentLimit + 1)
            validate_good_coloring(*rep.witness, cycle_len, fan_blades);
    } else if (completed_count == results.size()) {
        rep.outcome = SearchOutcome::arrows;
        rep.nodes_expanded = counted_nodes;
    } else {
        rep.outcome = SearchOutcome::budget_exhausted;
        rep.nodes_expanded = counted_nodes;
        std::string path = !opts.checkpoint_path.empty() ? opts.checkpoint_path
                           : !opts.resume_path.empty()   ? opts.resume_path
                                                         : std::string();
        if (!path.empty()) {
            Frontier f;
            f.question = rep.question;
            f.split_vertex = opts.split_vertex;
            f.pruning = opts.pruning;
            f.prefix_nodes = prefix_nodes;
            f.branches_total = rep.branches_total;
            f.completed = results;
            write_frontier(path, f);
            rep.checkpoint_written = path;
        }
    }
    (void)prefix_complete;
    rep.wall_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    return rep;
}

SearchReport ramsey_exact_search(int cycle_len, int fan_blades, int max_n,
                                 const SearchOptions& opts) {
    require(max_n >= 1, Errc::invalid_argument, "need max_n >= 1");
    auto t0 = Clock::now();
    SearchReport rep;
    rep.question = {SearchQuestion::Kind::exact, 0, cycle_len, fan_blades, max_n};
    rep.budget_seconds = opts.budget_seconds;
    rep.threads = opts.threads;
    rep.pruning = opts.pruning;
    rep.split_vertex = opts.split_vertex;

    std::optional<TwoColoring> last_good;
    std::uint64_t nodes = 0;
    for (int N = 1; N <= max_n; ++N) {
        SearchOptions sub = opts;
        sub.resume_path.clear();
        sub.checkpoint_path.clear();
        if (opts.budget_seconds >= 0) {
            double left = opts.budget_seconds -
                          std::chrono::duration<double>(Clock::now() - t0).count();
            sub.budget_seconds = std::max(0.0, left);
        }
        SearchReport r = arrows_search(N, cycle_len, fan_blades, sub);
        nodes += r.nodes_expanded;
        if (r.outcome == SearchOutcome::budget_exhausted) {
            rep.outcome = SearchOutcome::budget_exhausted;
            rep.nodes_expanded = nodes;
            rep.value = N;  // first undecided order
            rep.wall_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
            return rep;
        }
        if (r.outcome == SearchOutcome::arrows) {
            require(bool(last_good) || N == 1, Errc::inconsistent,
                    "arrows held with no good coloring one below");
            rep.outcome = SearchOutcome::exact_value;
            rep.value = N;
            rep.witness = std::move(last_good);
            rep.nodes_expanded = nodes;
            rep.wall_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
            return rep;
        }
        last_good = std::move(r.witness);
    }
    rep.outcome = SearchOutcome::budget_exhausted;  // value exceeds max_n
    rep.value = -1;
    rep.witness = std::move(last_good);
    rep.nodes_expanded = nodes;
    rep.wall_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    return rep;
}

AuditReport random_coloring_audit(int n, int cycle_len, int fan_blades, std::uint64_t samples,
                                  std::uint64_t seed, bool exhaustive) {
    require(n >= 1 && n <= kExactCycleComponentLimit, Errc::size_limit,
            "audit needs n within the exact detector limit");
    require(cycle_len >= 3 && fan_blades >= 1, Errc::invalid_argument, "bad targets");
    AuditReport rep;
    rep.n = n;
    rep.cycle = cycle_len;
    rep.fan = fan_blades;
    rep.seed = seed;
    rep.exhaustive = exhaustive;

    int pairs = n * (n - 1) / 2;
    require(!exhaustive || pairs <= 22, Errc::size_limit,
            "exhaustive audit is limited to 2^22 colorings");

    std::mt19937_64 rng(seed);
    std::uint64_t total = exhaustive ? (1ull << pairs) : samples;
    rep.samples = total;

    constexpr std::uint64_t kKeepCap = 4;
    for (std::uint64_t it = 0; it < total; ++it) {
        GraphBuilder b(n);
        if (exhaustive) {
            int bit = 0;
            for (int v = 1; v < n; ++v)
                for (int u = 0; u < v; ++u, ++bit)
                    if ((it >> bit) & 1) b.add_edge(u, v);
        } else {
            std::uint64_t word = 0;
            int avail = 0;
            for (int v = 1; v < n; ++v)
                for (int u = 0; u < v; ++u) {
                    if (avail == 0) {
                        word = rng();
                        avail = 64;
                    }
                    if (word & 1) b.add_edge(u, v);
                    word >>= 1;
                    --avail;
                }
        }
        SimpleGraph red = std::move(b).build();
        bool has_cycle = bool(has_cycle_of_length(red, cycle_len));
        SimpleGraph blue = complement(red);
        bool has_fan = false;
        for (int v = 0; v < n && !has_fan; ++v)
            if (matching_number_within(blue, blue.row(v)) >= fan_blades) has_fan = true;
        if (has_cycle) ++rep.with_red_cycle;
        if (has_fan) ++rep.with_blue_fan;
        if (has_cycle || has_fan) {
            ++rep.with_either;
        } else {
            ++rep.good_colorings;
            if (rep.counterexamples.size() < kKeepCap) {
                TwoColoring w(red);
                Certificate c = verify_witness(w, cycle_len, fan_blades);
                require(c.verdict == Verdict::avoids, Errc::inconsistent,
                        "audit counterexample failed certification");
                rep.counterexamples.push_back(std::move(w));
            }
        }
    }
    return rep;
}

}  // namespace ramsey
