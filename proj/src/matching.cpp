#include "matching.hpp"

#include <algorithm>
#include <array>

namespace ramsey {

namespace {

// Edmonds' blossom algorithm over the bit-matrix graph, restricted to an
// optional vertex mask. Scratch buffers are reused across calls through a
// thread_local instance; augmentation order is fixed (ascending vertices and
// neighbors), so results are deterministic.
struct BlossomEngine {
    int n = 0;
    const SimpleGraph* g = nullptr;
    std::vector<std::uint64_t> allowed;
    std::vector<int> match, parent, base, queue;
    std::vector<std::uint8_t> used, blossom;

    void reset(const SimpleGraph& graph, const std::uint64_t* mask) {
        g = &graph;
        n = graph.order();
        int W = graph.row_words();
        allowed.assign(size_t(std::max(W, 1)), ~std::uint64_t(0));
        if (mask) {
            for (int k = 0; k < W; ++k) allowed[k] = mask[k];
        } else if (W > 0) {
            // trim to exactly n bits
            for (int k = 0; k < W; ++k) allowed[k] = ~std::uint64_t(0);
        }
        if (W > 0) {
            int tail = n & 63;
            if (tail) allowed[W - 1] &= (std::uint64_t(1) << tail) - 1;
            for (int k = (n + 63) / 64; k < W; ++k) allowed[k] = 0;
        }
        match.assign(n, -1);
        parent.assign(n, -1);
        base.assign(n, 0);
        used.assign(n, 0);
        blossom.assign(n, 0);
    }

    bool in(int v) const { return bits::test(allowed.data(), v); }

    template <class Fn>
    void for_neighbors(int v, Fn&& fn) {
        const std::uint64_t* r = g->row(v);
        int W = g->row_words();
        for (int k = 0; k < W; ++k) {
            std::uint64_t x = r[k] & allowed[k];
            while (x) {
                int u = k * 64 + __builtin_ctzll(x);
                x &= x - 1;
                fn(u);
            }
        }
    }

    int lca(int a, int b) {
        std::vector<std::uint8_t> mark(n, 0);
        for (;;) {
            a = base[a];
            mark[a] = 1;
            if (match[a] == -1) break;
            a = parent[match[a]];
        }
        for (;;) {
            b = base[b];
            if (mark[b]) return b;
            // Cannot cross into another alternating tree while the matching is
            // maximum; that would be an augmenting path between free roots.
            require(match[b] != -1, Errc::inconsistent, "blossom lca crossed trees");
            b = parent[match[b]];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base[v] != b) {
            blossom[base[v]] = 1;
            blossom[base[match[v]]] = 1;
            parent[v] = child;
            child = match[v];
            v = parent[match[v]];
        }
    }

    // BFS for an augmenting path from root; returns the free endpoint or -1.
    int find_path(int root) {
        std::fill(used.begin(), used.end(), 0);
        std::fill(parent.begin(), parent.end(), -1);
        for (int i = 0; i < n; ++i) base[i] = i;
        used[root] = 1;
        queue.clear();
        queue.push_back(root);
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            int found = -1;
            for_neighbors(v, [&](int to) {
                if (found != -1) return;
                if (base[v] == base[to] || match[v] == to) return;
                if (to == root || (match[to] != -1 && parent[match[to]] != -1)) {
                    int cur = lca(v, to);
                    std::fill(blossom.begin(), blossom.end(), 0);
                    mark_path(v, cur, to);
                    mark_path(to, cur, v);
                    for (int i = 0; i < n; ++i) {
                        if (!in(i)) continue;
                        if (blossom[base[i]]) {
                            base[i] = cur;
                            if (!used[i]) {
                                used[i] = 1;
                                queue.push_back(i);
                            }
                        }
                    }
                } else if (parent[to] == -1) {
                    parent[to] = v;
                    if (match[to] == -1) {
                        found = to;
                    } else {
                        used[match[to]] = 1;
                        queue.push_back(match[to]);
                    }
                }
            });
            if (found != -1) return found;
        }
        return -1;
    }

    void augment(int v) {
        while (v != -1) {
            int pv = parent[v];
            int ppv = match[pv];
            match[v] = pv;
            match[pv] = v;
            v = ppv;
        }
    }

    // Returns nu; `match` holds the resulting matching.
    int run(const SimpleGraph& graph, const std::uint64_t* mask) {
        reset(graph, mask);
        int matched = 0;
        // greedy seed
        for (int v = 0; v < n; ++v) {
            if (!in(v) || match[v] != -1) continue;
            int pick = -1;
            for_neighbors(v, [&](int u) {
                if (pick == -1 && match[u] == -1 && u != v) pick = u;
            });
            if (pick != -1) {
                match[v] = pick;
                match[pick] = v;
                ++matched;
            }
        }
        for (int root = 0; root < n; ++root) {
            if (!in(root) || match[root] != -1) continue;
            int v = find_path(root);
            if (v != -1) {
                augment(v);
                ++matched;
            }
        }
        return matched;
    }
};

BlossomEngine& engine() {
    thread_local BlossomEngine e;
    return e;
}

std::vector<std::uint64_t> full_mask(const SimpleGraph& g) {
    int W = g.row_words();
    std::vector<std::uint64_t> m(std::max(W, 1), 0);
    for (int v = 0; v < g.order(); ++v) bits::set(m.data(), v);
    return m;
}

std::vector<std::uint64_t> set_mask(const SimpleGraph& g, const VertexSet& s) {
    std::vector<std::uint64_t> m(std::max(g.row_words(), 1), 0);
    for (int v : s) bits::set(m.data(), v);
    return m;
}

}  // namespace

int matching_number(const SimpleGraph& g) { return engine().run(g, nullptr); }

int matching_number_within(const SimpleGraph& g, const std::uint64_t* allowed) {
    return engine().run(g, allowed);
}

Matching max_matching_within(const SimpleGraph& g, const std::uint64_t* allowed) {
    Matching out;
    if (g.order() == 0) return out;
    std::vector<std::uint64_t> mask =
        allowed ? std::vector<std::uint64_t>(allowed, allowed + g.row_words()) : full_mask(g);
    int target = matching_number_within(g, mask.data());
    if (target == 0) return out;
    // Greedy lexicographic extraction: commit the smallest edge that still
    // extends to a maximum matching, then continue on the shrunken mask. Every
    // later matching edge is lexicographically larger than the committed one,
    // so the sorted edge list is the lex-least among maximum matchings.
    int start_u = 0, start_v = 1;
    while (out.size() < target) {
        bool committed = false;
        for (int u = start_u; u < g.order() && !committed; ++u) {
            if (!bits::test(mask.data(), u)) continue;
            for (int v = (u == start_u ? start_v : u + 1); v < g.order(); ++v) {
                if (!bits::test(mask.data(), v) || !g.adjacent(u, v)) continue;
                bits::clear(mask.data(), u);
                bits::clear(mask.data(), v);
                if (matching_number_within(g, mask.data()) == target - out.size() - 1) {
                    out.edges.emplace_back(u, v);
                    start_u = u;
                    start_v = v + 1;
                    committed = true;
                    break;
                }
                bits::set(mask.data(), u);
                bits::set(mask.data(), v);
            }
        }
        require(committed, Errc::inconsistent, "lexicographic matching extraction failed");
    }
    return out;
}

Matching max_matching(const SimpleGraph& g) { return max_matching_within(g, nullptr); }

namespace {

// Number of odd components of g restricted to `mask` minus removed set size is
// computed by the callers; this only counts odd components within mask.
int odd_components_within(const SimpleGraph& g, const std::uint64_t* mask, int words) {
    std::vector<std::uint64_t> remaining(mask, mask + words);
    std::vector<std::uint64_t> frontier(words), reach(words), next(words);
    int odd = 0;
    for (int v = 0; v < g.order(); ++v) {
        if (!bits::test(remaining.data(), v)) continue;
        std::fill(reach.begin(), reach.end(), 0);
        std::fill(frontier.begin(), frontier.end(), 0);
        bits::set(reach.data(), v);
        bits::set(frontier.data(), v);
        bool grew = true;
        while (grew) {
            grew = false;
            std::fill(next.begin(), next.end(), 0);
            bits::for_each(frontier.data(), words, [&](int u) {
                const std::uint64_t* r = g.row(u);
                for (int k = 0; k < words; ++k) next[k] |= r[k];
            });
            for (int k = 0; k < words; ++k) {
                std::uint64_t fresh = next[k] & remaining[k] & ~reach[k];
                if (fresh) grew = true;
                frontier[k] = fresh;
                reach[k] |= fresh;
            }
        }
        int size = bits::popcount(reach.data(), words);
        if (size & 1) ++odd;
        for (int k = 0; k < words; ++k) remaining[k] &= ~reach[k];
    }
    return odd;
}

constexpr int kExhaustiveDeficiencyLimit = 20;

}  // namespace

DeficiencyWitness berge_deficiency(const SimpleGraph& g) {
    int n = g.order();
    int nu = matching_number(g);
    DeficiencyWitness out;
    out.deficiency = n - 2 * nu;
    int W = std::max(g.row_words(), 1);

    if (n <= kExhaustiveDeficiencyLimit) {
        // Trusted oracle at desk scale: scan all subsets S, ascending mask
        // order, keep the first attaining the maximum.
        std::uint32_t best_mask = 0;
        int best = -n - 1;
        std::vector<std::uint64_t> m(W);
        for (std::uint32_t s = 0; s < (1u << n); ++s) {
            std::fill(m.begin(), m.end(), 0);
            int size = 0;
            for (int v = 0; v < n; ++v)
                if (!((s >> v) & 1)) bits::set(m.data(), v);
            for (int v = 0; v < n; ++v) size += (s >> v) & 1;
            int q = odd_components_within(g, m.data(), W);
            if (q - size > best) {
                best = q - size;
                best_mask = s;
            }
        }
        require(best == out.deficiency, Errc::inconsistent,
                "Berge-Tutte identity violated by exhaustive witness search");
        for (int v = 0; v < n; ++v)
            if ((best_mask >> v) & 1) out.witness_set.push_back(v);
        return out;
    }

    // Gallai-Edmonds style extraction: label outer vertices from all free
    // roots in one multi-source blossom phase; D = outer, S = N(D) \ D.
    BlossomEngine& e = engine();
    e.run(g, nullptr);
    std::fill(e.used.begin(), e.used.end(), 0);
    std::fill(e.parent.begin(), e.parent.end(), -1);
    for (int i = 0; i < n; ++i) e.base[i] = i;
    e.queue.clear();
    for (int v = 0; v < n; ++v)
        if (e.match[v] == -1) {
            e.used[v] = 1;
            e.queue.push_back(v);
        }
    for (size_t qi = 0; qi < e.queue.size(); ++qi) {
        int v = e.queue[qi];
        e.for_neighbors(v, [&](int to) {
            if (e.base[v] == e.base[to] || e.match[v] == to) return;
            if (e.used[to] || (e.match[to] != -1 && e.parent[e.match[to]] != -1)) {
                int cur = e.lca(v, to);
                std::fill(e.blossom.begin(), e.blossom.end(), 0);
                e.mark_path(v, cur, to);
                e.mark_path(to, cur, v);
                for (int i = 0; i < n; ++i)
                    if (e.blossom[e.base[i]]) {
                        e.base[i] = cur;
                        if (!e.used[i]) {
                            e.used[i] = 1;
                            e.queue.push_back(i);
                        }
                    }
            } else if (e.parent[to] == -1) {
                e.parent[to] = v;
                // matching is maximum, so to is matched
                e.used[e.match[to]] = 1;
                e.queue.push_back(e.match[to]);
            }
        });
    }
    std::vector<std::uint64_t> keep(W, 0);
    std::vector<std::uint8_t> outer(e.used.begin(), e.used.end());
    for (int v = 0; v < n; ++v) bits::set(keep.data(), v);
    for (int v = 0; v < n; ++v) {
        if (outer[v]) continue;
        bool adj_outer = false;
        for (int u : g.neighbors(v))
            if (outer[u]) adj_outer = true;
        if (adj_outer) {
            out.witness_set.push_back(v);
            bits::clear(keep.data(), v);
        }
    }
    int q = odd_components_within(g, keep.data(), W);
    require(q - int(out.witness_set.size()) == out.deficiency, Errc::inconsistent,
            "Gallai-Edmonds witness does not attain the Berge-Tutte deficiency");
    return out;
}

HallResult hall_deficiency(const SimpleGraph& g, const VertexSet& x, const VertexSet& y) {
    std::vector<char> in_x(g.order(), 0), in_y(g.order(), 0);
    for (int v : x) in_x[v] = 1;
    for (int v : y) {
        require(!in_x[v], Errc::invalid_argument, "Hall parts overlap at " + std::to_string(v));
        in_y[v] = 1;
    }
    for (auto [u, v] : g.edges())
        require((in_x[u] && in_y[v]) || (in_x[v] && in_y[u]), Errc::invalid_argument,
                "graph is not bipartite between the given parts: edge (" + std::to_string(u) +
                    "," + std::to_string(v) + ")");

    auto mask = set_mask(g, x);
    auto my = set_mask(g, y);
    for (size_t k = 0; k < mask.size(); ++k) mask[k] |= my[k];
    BlossomEngine& e = engine();
    int nu = e.run(g, mask.data());
    HallResult out;
    out.deficiency = int(x.size()) - nu;

    // Alternating reachability from free X vertices: X -> Y over non-matching
    // edges, Y -> X back over matching edges. The reachable X side attains the
    // maximum of |S| - |N(S)|.
    std::vector<char> reach(g.order(), 0);
    std::vector<int> stack;
    for (int v : x)
        if (e.match[v] == -1) {
            reach[v] = 1;
            stack.push_back(v);
        }
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(u)) {
            if (!in_y[w] || reach[w]) continue;
            reach[w] = 1;
            int back = e.match[w];
            if (back != -1 && !reach[back]) {
                reach[back] = 1;
                stack.push_back(back);
            }
        }
    }
    for (int v : x)
        if (reach[v]) out.violator.push_back(v);
    if (out.deficiency == 0) out.violator.clear();
    return out;
}

std::pair<int, FanEmbedding> max_fan_blades(const SimpleGraph& g, int v) {
    require(v >= 0 && v < g.order(), Errc::invalid_argument, "fan center out of range");
    Matching m = max_matching_within(g, g.row(v));
    FanEmbedding fan;
    fan.center = v;
    fan.blades = m.edges;
    return {m.size(), std::move(fan)};
}

int fan_blades_count(const SimpleGraph& g, int v) {
    return matching_number_within(g, g.row(v));
}

std::optional<FanEmbedding> find_fan(const SimpleGraph& g, int n_blades) {
    require(n_blades >= 1, Errc::invalid_argument, "fan needs at least one blade");
    for (int v = 0; v < g.order(); ++v) {
        if (fan_blades_count(g, v) >= n_blades) return max_fan_blades(g, v).second;
    }
    return std::nullopt;
}

ConnectedMatching connected_matching_number(const SimpleGraph& g) {
    ConnectedMatching best;
    int n = g.order();
    if (n == 0) return best;
    int W = g.row_words();
    // Component masks by bitset BFS; the witness is the first component (in
    // decreasing size, then lexicographic order) attaining the maximum, which
    // this discovery order reproduces without sorting.
    thread_local std::vector<std::uint64_t> seen, comp, frontier, next, best_mask;
    seen.assign(W, 0);
    best_mask.assign(W, 0);
    int best_nu = -1, best_size = 0;
    for (int v = 0; v < n; ++v) {
        if (bits::test(seen.data(), v)) continue;
        comp.assign(W, 0);
        frontier.assign(W, 0);
        bits::set(comp.data(), v);
        bits::set(frontier.data(), v);
        bool grew = true;
        while (grew) {
            grew = false;
            next.assign(W, 0);
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
        int size = bits::popcount(comp.data(), W);
        int nu = matching_number_within(g, comp.data());
        if (nu > best_nu || (nu == best_nu && size > best_size)) {
            best_nu = nu;
            best_size = size;
            best_mask = comp;
        }
    }
    best.size = best_nu < 0 ? 0 : best_nu;
    bits::for_each(best_mask.data(), W, [&](int v) { best.component.push_back(v); });
    return best;
}

bool validate_matching(const SimpleGraph& g, const Matching& m) {
    std::vector<char> seen(g.order(), 0);
    for (auto [u, v] : m.edges) {
        if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || u == v) return false;
        if (!g.adjacent(u, v)) return false;
        if (seen[u] || seen[v]) return false;
        seen[u] = seen[v] = 1;
    }
    return true;
}

bool validate_fan(const SimpleGraph& g, const FanEmbedding& f) {
    if (f.center < 0 || f.center >= g.order()) return false;
    std::vector<char> seen(g.order(), 0);
    seen[f.center] = 1;
    for (auto [x, y] : f.blades) {
        if (x < 0 || y < 0 || x >= g.order() || y >= g.order() || x == y) return false;
        if (x == f.center || y == f.center) return false;
        if (seen[x] || seen[y]) return false;
        seen[x] = seen[y] = 1;
        if (!g.adjacent(x, y) || !g.adjacent(f.center, x) || !g.adjacent(f.center, y))
            return false;
    }
    return true;
}

}  // namespace ramsey
