#include "cycles.hpp"

#include <algorithm>
#include <bit>
#include <deque>

namespace ramsey {

bool validate_cycle(const SimpleGraph& g, const CycleEmbedding& c) {
    int len = c.length();
    if (len < 3) return false;
    std::vector<char> seen(g.order(), 0);
    for (int v : c.vertices) {
        if (v < 0 || v >= g.order() || seen[v]) return false;
        seen[v] = 1;
    }
    for (int i = 0; i < len; ++i)
        if (!g.adjacent(c.vertices[i], c.vertices[(i + 1) % len])) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Exact cycle structure per component: dynamic program over vertex subsets.
// For each anchor s (the minimum vertex of the cycle), dp[mask] is the set of
// endpoints v reachable from s by a simple path through exactly {s} + mask,
// where mask ranges over vertices above s. A set bit of adj[v] back to s
// closes a cycle of length popcount(mask) + 1.
// ---------------------------------------------------------------------------

namespace {

struct SubsetCycleKernel {
    int k = 0;
    std::array<std::uint32_t, kExactCycleComponentLimit> adj{};  // local adjacency
    std::array<int, kExactCycleComponentLimit> verts{};          // local -> global
    std::vector<std::uint32_t> dp;

    void load(const SimpleGraph& g, const VertexSet& comp) {
        k = int(comp.size());
        for (int i = 0; i < k; ++i) verts[i] = comp[i];
        fill_adjacency(g);
    }

    void load_mask(const SimpleGraph& g, const std::uint64_t* mask, int size) {
        k = size;
        int i = 0;
        bits::for_each(mask, g.row_words(), [&](int v) { verts[i++] = v; });
        fill_adjacency(g);
    }

    void fill_adjacency(const SimpleGraph& g) {
        for (int i = 0; i < k; ++i) {
            adj[i] = 0;
            for (int j = 0; j < k; ++j)
                if (i != j && g.adjacent(verts[i], verts[j])) adj[i] |= 1u << j;
        }
    }

    CycleEmbedding found_cycle() const {
        CycleEmbedding c;
        for (int v : found) c.vertices.push_back(verts[v]);
        return c;
    }

    // Walks dp backwards from (anchor, mask, end) to a local vertex list.
    std::vector<int> extract(int s, std::uint32_t idx, int end) const {
        std::vector<int> rev;
        int cur = end;
        std::uint32_t cur_idx = idx;
        while (cur_idx) {
            rev.push_back(cur);
            std::uint32_t prev_idx = cur_idx & ~(1u << (cur - s - 1));
            if (!prev_idx) break;
            std::uint32_t cand = dp[prev_idx] & adj[cur];
            cur = std::countr_zero(cand);
            cur_idx = prev_idx;
        }
        rev.push_back(s);
        std::reverse(rev.begin(), rev.end());
        return rev;
    }

    // Runs anchors in ascending order and collects the spectrum. If target >
    // 0, stops at the first cycle of that exact length; with want_longest the
    // running best is extracted immediately from the live dp table, so one
    // pass yields both the circumference and its witness. Witnesses land in
    // `found` (local indices).
    std::vector<int> found;

    std::uint32_t run(int target, bool want_longest) {
        std::uint32_t spectrum = 0;
        int best_len = 0;
        found.clear();
        for (int s = 0; s + 2 < k; ++s) {
            int m = k - s - 1;
            std::uint32_t above = ((m >= 31 ? ~0u : ((1u << m) - 1))) << (s + 1);
            std::uint32_t start = adj[s] & above;
            if (std::popcount(start) < 2) continue;
            if (want_longest && k - s <= best_len) break;  // cannot improve
            dp.assign(std::size_t(1) << m, 0);
            std::uint32_t x = start;
            while (x) {
                int u = std::countr_zero(x);
                x &= x - 1;
                dp[1u << (u - s - 1)] |= 1u << u;
            }
            for (std::uint32_t idx = 1; idx < (1u << m); ++idx) {
                std::uint32_t ends = dp[idx];
                if (!ends) continue;
                int len = std::popcount(idx) + 1;
                std::uint32_t closers = ends & adj[s];
                if (closers && len >= 3) {
                    spectrum |= 1u << len;
                    if (target == len) {
                        found = extract(s, idx, std::countr_zero(closers));
                        return spectrum;
                    }
                    if (want_longest && len > best_len) {
                        best_len = len;
                        found = extract(s, idx, std::countr_zero(closers));
                    }
                }
                if (len + 1 > k) continue;
                std::uint32_t e = ends;
                while (e) {
                    int v = std::countr_zero(e);
                    e &= e - 1;
                    std::uint32_t ext = adj[v] & above & ~(idx << (s + 1));
                    while (ext) {
                        int w = std::countr_zero(ext);
                        ext &= ext - 1;
                        dp[idx | (1u << (w - s - 1))] |= 1u << w;
                    }
                }
            }
        }
        return spectrum;
    }
};

SubsetCycleKernel& kernel() {
    thread_local SubsetCycleKernel k;
    return k;
}

// Visits each connected component as a bit mask (with its size), in discovery
// order by lowest vertex; scratch is reused across calls.
template <class Fn>
void visit_component_masks(const SimpleGraph& g, Fn&& fn) {
    int n = g.order();
    int W = g.row_words();
    thread_local std::vector<std::uint64_t> seen, comp, frontier, next;
    seen.assign(W, 0);
    comp.resize(W);
    frontier.resize(W);
    next.resize(W);
    for (int v = 0; v < n; ++v) {
        if (bits::test(seen.data(), v)) continue;
        std::fill(comp.begin(), comp.end(), 0);
        std::fill(frontier.begin(), frontier.end(), 0);
        bits::set(comp.data(), v);
        bits::set(frontier.data(), v);
        bool grew = true;
        while (grew) {
            grew = false;
            std::fill(next.begin(), next.end(), 0);
            bits::for_each(frontier.data(), W, [&](int u) {
                const std::uint64_t* r = g.row(u);
                for (int k = 0; k < W; ++k) next[k] |= r[k];
            });
            for (int k = 0; k < W; ++k) {
                std::uint64_t fresh = next[k] & ~comp[k];
                if (fresh) grew = true;
                frontier[k] = fresh;
                comp[k] |= fresh;
            }
        }
        for (int k = 0; k < W; ++k) seen[k] |= comp[k];
        fn(comp.data(), bits::popcount(comp.data(), W));
    }
}

VertexSet mask_to_set(const std::uint64_t* mask, int words) {
    VertexSet out;
    bits::for_each(mask, words, [&](int v) { out.push_back(v); });
    return out;
}

// Rotation-extension lower bound for oversized components; clearly non-exact.
CycleEmbedding heuristic_long_cycle(const SimpleGraph& g, const VertexSet& comp) {
    CycleEmbedding best;
    std::vector<char> in_path(g.order(), 0);
    int starts = std::min<int>(8, int(comp.size()));
    for (int si = 0; si < starts; ++si) {
        std::vector<int> path{comp[si]};
        std::fill(in_path.begin(), in_path.end(), 0);
        in_path[comp[si]] = 1;
        long long steps = 200LL * (long long)comp.size();
        while (steps-- > 0) {
            int tail = path.back();
            int ext = -1;
            for (int u : g.neighbors(tail))
                if (!in_path[u]) {
                    ext = u;
                    break;
                }
            if (ext != -1) {
                path.push_back(ext);
                in_path[ext] = 1;
                continue;
            }
            // closed? record the best cycle ending here
            if (int(path.size()) >= 3 && g.adjacent(path.front(), tail) &&
                int(path.size()) > best.length()) {
                best.vertices = path;
            }
            // Posa rotation: tail's neighbor u at position i flips the suffix
            bool rotated = false;
            for (size_t i = 0; i + 2 < path.size(); ++i) {
                if (g.adjacent(path[i], tail)) {
                    std::reverse(path.begin() + i + 1, path.end());
                    rotated = true;
                    break;
                }
            }
            if (!rotated) break;
        }
        int tail = path.back();
        if (int(path.size()) >= 3 && g.adjacent(path.front(), tail) &&
            int(path.size()) > best.length())
            best.vertices = path;
    }
    return best;
}

}  // namespace

std::optional<std::pair<int, CycleEmbedding>> girth(const SimpleGraph& g) {
    // Shortest cycle through each edge: BFS distance between its endpoints
    // with the edge itself removed. The global minimum is the girth and the
    // witness path is simple by construction.
    int n = g.order();
    int best = n + 1;
    CycleEmbedding best_cycle;
    std::vector<int> dist(n), par(n);
    for (auto [eu, ev] : g.edges()) {
        std::fill(dist.begin(), dist.end(), -1);
        std::deque<int> q;
        dist[eu] = 0;
        par[eu] = -1;
        q.push_back(eu);
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            if (dist[u] + 1 >= best) break;
            if (u == ev) break;
            for (int w : g.neighbors(u)) {
                if (u == eu && w == ev) continue;  // drop the closing edge
                if (dist[w] != -1) continue;
                dist[w] = dist[u] + 1;
                par[w] = u;
                q.push_back(w);
            }
        }
        if (dist[ev] != -1 && dist[ev] + 1 < best) {
            best = dist[ev] + 1;
            best_cycle.vertices.clear();
            for (int v = ev; v != -1; v = par[v]) best_cycle.vertices.push_back(v);
        }
    }
    if (best > n) return std::nullopt;
    return std::make_pair(best, best_cycle);
}

CircumferenceResult circumference(const SimpleGraph& g, CircumferenceOptions opts) {
    CircumferenceResult out;
    visit_component_masks(g, [&](const std::uint64_t* mask, int size) {
        if (size < 3) return;
        if (size <= kExactCycleComponentLimit) {
            SubsetCycleKernel& kn = kernel();
            kn.load_mask(g, mask, size);
            kn.run(0, true);
            int longest = int(kn.found.size());
            if (longest > out.length) {
                out.length = longest;
                out.cycle = kn.found_cycle();
            }
        } else if (opts.allow_heuristic) {
            out.exact = false;
            CycleEmbedding c = heuristic_long_cycle(g, mask_to_set(mask, g.row_words()));
            if (c.length() > out.length) {
                out.length = c.length();
                out.cycle = std::move(c);
            }
        } else {
            fail(Errc::size_limit,
                 "component with " + std::to_string(size) +
                     " vertices exceeds the exact longest-cycle limit of " +
                     std::to_string(kExactCycleComponentLimit) +
                     "; rerun with the heuristic enabled for a lower bound");
        }
    });
    return out;
}

std::optional<CycleEmbedding> has_cycle_of_length(const SimpleGraph& g, int k) {
    require(k >= 3, Errc::invalid_argument, "cycle length must be at least 3");
    bool oversized = false;
    std::optional<CycleEmbedding> out;
    visit_component_masks(g, [&](const std::uint64_t* mask, int size) {
        if (out || size < k) return;
        if (size > kExactCycleComponentLimit) {
            oversized = true;
            return;
        }
        SubsetCycleKernel& kn = kernel();
        kn.load_mask(g, mask, size);
        kn.run(k, false);
        if (!kn.found.empty()) out = kn.found_cycle();
    });
    if (out) return out;
    if (oversized)
        fail(Errc::size_limit, "cannot certify absence of C_" + std::to_string(k) +
                                   ": a component exceeds the exact limit");
    return std::nullopt;
}

std::set<int> cycle_spectrum(const SimpleGraph& g) {
    std::set<int> out;
    visit_component_masks(g, [&](const std::uint64_t* mask, int size) {
        if (size < 3) return;
        if (size > kExactCycleComponentLimit) [[unlikely]]
            fail(Errc::size_limit, "component exceeds the exact cycle-spectrum limit");
        SubsetCycleKernel& kn = kernel();
        kn.load_mask(g, mask, size);
        std::uint32_t spectrum = kn.run(0, false);
        for (int len = 3; len <= size; ++len)
            if ((spectrum >> len) & 1) out.insert(len);
    });
    return out;
}

TwoConnectivity is_two_connected(const SimpleGraph& g) {
    TwoConnectivity out;
    int n = g.order();
    out.connected = is_connected(g);
    if (n < 3) return out;  // 2-connectivity needs n >= 3 by convention
    if (!out.connected) return out;

    // Iterative articulation-point DFS (lowpoints); neighbor iteration goes
    // straight over the bit rows via a per-vertex cursor.
    thread_local std::vector<int> disc, low, parent, it, stack;
    disc.assign(n, -1);
    low.assign(n, 0);
    parent.assign(n, -1);
    it.assign(n, 0);
    stack.clear();
    int timer = 0;
    int best_cut = -1;
    int root_children = 0;
    stack.push_back(0);
    disc[0] = low[0] = timer++;
    int W = g.row_words();
    while (!stack.empty()) {
        int u = stack.back();
        int w = bits::next_set_bit(g.row(u), W, it[u]);
        if (w >= 0) {
            it[u] = w + 1;
            if (disc[w] == -1) {
                parent[w] = u;
                if (u == 0) ++root_children;
                disc[w] = low[w] = timer++;
                stack.push_back(w);
            } else if (w != parent[u]) {
                low[u] = std::min(low[u], disc[w]);
            }
        } else {
            stack.pop_back();
            int p = parent[u];
            if (p != -1) {
                low[p] = std::min(low[p], low[u]);
                if (p != 0 && low[u] >= disc[p])
                    if (best_cut == -1 || p < best_cut) best_cut = p;
            }
        }
    }
    if (root_children > 1 && (best_cut == -1 || 0 < best_cut)) best_cut = 0;
    if (best_cut != -1) {
        out.cut_vertex = best_cut;
        return out;
    }
    out.two_connected = true;
    return out;
}

DiracReport check_dirac(const SimpleGraph& g) {
    DiracReport rep;
    rep.min_degree = g.min_degree();
    TwoConnectivity tc = is_two_connected(g);
    if (!tc.two_connected) {
        rep.hypothesis_note = g.order() < 3 ? "fewer than 3 vertices"
                              : tc.connected ? "not 2-connected (cut vertex exists)"
                                             : "disconnected";
        return rep;
    }
    rep.hypothesis_met = true;
    rep.bound = std::min(2 * rep.min_degree, g.order());
    CircumferenceResult c = circumference(g);
    rep.circumference = c.length;
    rep.witness = std::move(c.cycle);
    rep.holds = rep.circumference >= rep.bound;
    return rep;
}

BondyReport check_bondy(const SimpleGraph& g) {
    BondyReport rep;
    int n = g.order();
    rep.min_degree = g.min_degree();
    if (n < 3 || 2 * rep.min_degree < n) {
        rep.verdict = BondyVerdict::hypothesis_not_met;
        return rep;
    }
    // K_{r,r} is recognized structurally: the complement is a disjoint union
    // of two equal cliques.
    if (n % 2 == 0) {
        SimpleGraph co = complement(g);
        auto comps = components(co);
        if (comps.size() == 2 && int(comps[0].size()) == n / 2 &&
            int(comps[1].size()) == n / 2) {
            bool cliques = true;
            for (const auto& comp : comps)
                for (int v : comp)
                    if (co.degree(v) != n / 2 - 1) cliques = false;
            if (cliques) {
                rep.verdict = BondyVerdict::exception_krr;
                return rep;
            }
        }
    }
    rep.spectrum = cycle_spectrum(g);
    bool pan = true;
    for (int len = 3; len <= n; ++len)
        if (!rep.spectrum.count(len)) pan = false;
    rep.verdict = pan ? BondyVerdict::pancyclic : BondyVerdict::violated;
    return rep;
}

}  // namespace ramsey
