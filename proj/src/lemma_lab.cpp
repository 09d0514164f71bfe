#include "lemma_lab.hpp"

#include <algorithm>
#include <bit>
#include <chrono>

namespace ramsey {

PartialTwoColoring::PartialTwoColoring(SimpleGraph host_graph, SimpleGraph red_graph)
    : host(std::move(host_graph)), red(std::move(red_graph)) {
    require(host.order() == red.order(), Errc::invalid_argument,
            "host and red graphs must share a vertex set");
    for (auto [u, v] : red.edges())
        require(host.adjacent(u, v), Errc::invalid_argument,
                "red edge (" + std::to_string(u) + "," + std::to_string(v) +
                    ") is absent from the host graph");
}

SimpleGraph PartialTwoColoring::blue() const {
    GraphBuilder b(host.order());
    for (auto [u, v] : host.edges())
        if (!red.adjacent(u, v)) b.add_edge(u, v);
    return std::move(b).build();
}

int PartialTwoColoring::absent_count(int v) const {
    return host.order() - 1 - host.degree(v);
}

int PartialTwoColoring::max_absent() const {
    int mx = 0;
    for (int v = 0; v < host.order(); ++v) mx = std::max(mx, absent_count(v));
    return mx;
}

ComponentLemmaReport check_component_lemma(const PartialTwoColoring& pc) {
    ComponentLemmaReport rep;
    rep.n = pc.order();
    rep.min_degree = pc.host.min_degree();
    if (rep.n == 0 || 4 * rep.min_degree < 3 * rep.n) {
        rep.note = "hypothesis not met: needs delta(G) >= 3|V|/4";
        return rep;
    }
    rep.hypothesis_met = true;
    auto red_comps = components(pc.red);
    auto blue_comps = components(pc.blue());
    // components() sorts by decreasing size; red wins ties for determinism
    const VertexSet* best = nullptr;
    const char* color = "red";
    if (!red_comps.empty()) best = &red_comps.front();
    if (!blue_comps.empty() &&
        (best == nullptr || blue_comps.front().size() > best->size())) {
        best = &blue_comps.front();
        color = "blue";
    }
    if (best && int(best->size()) > rep.min_degree) {
        rep.color = color;
        rep.component = *best;
        return rep;
    }
    rep.violated = true;  // impossible for a correct implementation
    return rep;
}

FigajLuczakReport check_figaj_luczak(const SimpleGraph& g, const VertexSet& v1,
                                     const VertexSet& v2, const Rational& eps) {
    FigajLuczakReport rep;
    rep.eps = eps;
    require(v1.size() >= v2.size(), Errc::invalid_argument, "|V1| must be >= |V2|");
    std::vector<char> in1(g.order(), 0), in2(g.order(), 0);
    for (int v : v1) in1[v] = 1;
    for (int v : v2) {
        require(!in1[v], Errc::invalid_argument, "parts overlap");
        in2[v] = 1;
    }
    for (auto [u, v] : g.edges())
        require((in1[u] && in2[v]) || (in1[v] && in2[u]), Errc::invalid_argument,
                "graph is not bipartite between the given parts");
    if (!(eps > Rational(0, 1) && eps < Rational(1, 100))) {
        rep.note = "hypothesis not met: needs 0 < eps < 0.01";
        return rep;
    }
    long long a = (long long)v1.size(), b = (long long)v2.size();
    rep.edges = g.edge_count();
    // e >= (1 - eps) a b, exactly: e * den >= (den - num) * a * b
    __int128 lhs = (__int128)rep.edges * eps.den;
    __int128 rhs = (__int128)(eps.den - eps.num) * a * b;
    rep.required_edges = (long long)((rhs + eps.den - 1) / eps.den);
    if (lhs < rhs) {
        rep.note = "hypothesis not met: too few edges (" + std::to_string(rep.edges) + " < (1-eps)|V1||V2|)";
        return rep;
    }
    rep.hypothesis_met = true;

    // thresholds (1-3eps)(a+b) and (1-3eps) b, as exact ceilings
    auto ceil_one_minus_3eps_times = [&](long long x) {
        __int128 num = (__int128)(eps.den - 3 * eps.num) * x;
        return (long long)((num + eps.den - 1) / eps.den);
    };
    rep.component_threshold = ceil_one_minus_3eps_times(a + b);
    rep.matching_threshold = ceil_one_minus_3eps_times(b);

    for (const VertexSet& comp : components(g)) {
        if ((long long)comp.size() < rep.component_threshold) break;  // sorted by size
        std::vector<std::uint64_t> mask(std::max(g.row_words(), 1), 0);
        for (int v : comp) bits::set(mask.data(), v);
        int nu = matching_number_within(g, mask.data());
        if (nu >= rep.matching_threshold) {
            rep.component = comp;
            rep.matching_size = nu;
            return rep;
        }
    }
    rep.violated = true;
    return rep;
}

// ---------------------------------------------------------------------------
// Exhaustive 3-colorings of K_N for the star/matchings lemma: color 1 loses to
// a star S_k, color 2 to a matching n1 K_2, color 3 to n2 K_2. Same
// vertex-extension order as the 2-color search; the only symmetry rule is the
// first-row monotonicity (colors are pairwise distinct targets).
// ---------------------------------------------------------------------------

namespace {

struct ThreeColorEngine {
    int n = 0, k = 1, n1 = 1, n2 = 1;
    std::array<std::uint64_t, 32> c1{}, c2{}, c3{};
    std::uint64_t nodes = 0;
    bool found = false;
    std::vector<std::uint8_t> witness;  // colors per pair, column-major
    std::chrono::steady_clock::time_point deadline{};
    bool has_deadline = false;
    bool aborted = false;

    std::uint64_t* layer(int c) { return c == 1 ? c1.data() : c == 2 ? c2.data() : c3.data(); }

    static bool matching_at_least(const std::uint64_t* adj, std::uint64_t allowed, int t) {
        if (t <= 0) return true;
        while (allowed) {
            int v = std::countr_zero(allowed);
            std::uint64_t nb = adj[v] & allowed & ~(1ull << v);
            if (!nb) {
                allowed &= ~(1ull << v);
                continue;
            }
            std::uint64_t rest = allowed & ~(1ull << v);
            while (nb) {
                int w = std::countr_zero(nb);
                nb &= nb - 1;
                if (matching_at_least(adj, rest & ~(1ull << w), t - 1)) return true;
            }
            return matching_at_least(adj, rest, t);
        }
        return false;
    }

    bool hits_target(int i) {
        // star in color 1: any vertex with degree >= k gains only at i or its
        // color-1 neighbors
        std::uint64_t check = c1[i] | (1ull << i);
        while (check) {
            int v = std::countr_zero(check);
            check &= check - 1;
            if (std::popcount(c1[v]) >= k) return true;
        }
        std::uint64_t all = (i + 1 == 64) ? ~0ull : ((1ull << (i + 1)) - 1);
        if (matching_at_least(c2.data(), all, n1)) return true;
        if (matching_at_least(c3.data(), all, n2)) return true;
        return false;
    }

    bool complete_vertex(int i) {
        ++nodes;
        if ((nodes & 0xFFF) == 0 && has_deadline &&
            std::chrono::steady_clock::now() >= deadline) {
            aborted = true;
            return false;
        }
        if (i > 0 && hits_target(i)) return true;
        if (i + 1 == n) {
            found = true;
            witness.clear();
            for (int v = 1; v < n; ++v)
                for (int u = 0; u < v; ++u)
                    witness.push_back((c1[u] >> v) & 1 ? 1 : (c2[u] >> v) & 1 ? 2 : 3);
            return false;
        }
        return assign(i + 1, 0);
    }

    bool assign(int i, int j) {
        if (j == i) return complete_vertex(i);
        int floor_color = 1;
        if (j == 0 && i >= 2) {
            // first-row monotonicity: color(0,1) <= color(0,2) <= ...
            floor_color = (c1[0] >> (i - 1)) & 1 ? 1 : (c2[0] >> (i - 1)) & 1 ? 2 : 3;
        }
        for (int c = floor_color; c <= 3; ++c) {
            std::uint64_t* adj = layer(c);
            adj[j] |= 1ull << i;
            adj[i] |= 1ull << j;
            if (!assign(i, j + 1)) return false;
            adj[j] &= ~(1ull << i);
            adj[i] &= ~(1ull << j);
        }
        return true;
    }

    // true iff a coloring avoiding all three targets exists
    bool search(int order) {
        n = order;
        c1.fill(0);
        c2.fill(0);
        c3.fill(0);
        found = false;
        if (n == 0) {
            found = true;  // empty coloring avoids everything
            return true;
        }
        assign(0, 0);
        return found;
    }
};

}  // namespace

StarMatchingReport check_star_matching_small(int k, int n1, int n2, double budget_seconds) {
    StarMatchingReport rep;
    rep.k = k;
    rep.n1 = n1;
    rep.n2 = n2;
    rep.formula_value = star_matching_ramsey(k, n1, n2);
    require(rep.formula_value <= 10, Errc::size_limit,
            "exhaustive 3-coloring confirmation is limited to formula values <= 10");

    ThreeColorEngine e;
    e.k = k;
    e.n1 = n1;
    e.n2 = n2;
    if (budget_seconds >= 0) {
        e.has_deadline = true;
        e.deadline = std::chrono::steady_clock::now() +
                     std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                         std::chrono::duration<double>(budget_seconds));
    }
    bool good_at_value = e.search(int(rep.formula_value));
    require(!e.aborted, Errc::budget_exhausted, "star/matchings search ran out of budget");
    rep.nodes = e.nodes;
    rep.arrows_at_value = !good_at_value;

    bool good_below = e.search(int(rep.formula_value) - 1);
    require(!e.aborted, Errc::budget_exhausted, "star/matchings search ran out of budget");
    rep.nodes += e.nodes;
    rep.good_coloring_below = good_below;
    if (good_below) rep.witness = e.witness;
    rep.violated = !(rep.arrows_at_value && rep.good_coloring_below);
    return rep;
}

ClaimsAudit claims_audit(const PartialTwoColoring& pc, const Rational& a, const Rational& beta,
                         ClaimsRegime regime, int max_defect) {
    require(a > Rational(0, 1), Errc::invalid_argument, "a must be positive");
    require(beta >= Rational(0, 1), Errc::invalid_argument, "beta must be non-negative");
    if (regime == ClaimsRegime::part_one)
        require(a >= Rational(1, 2) && a < Rational(1, 1), Errc::regime,
                "part-one claims need 1/2 <= a < 1");
    else
        require(a >= Rational(1, 1), Errc::regime, "part-two claims need a >= 1");
    require(pc.max_absent() <= max_defect, Errc::regime,
            "defect profile exceeds the cap: a vertex misses " +
                std::to_string(pc.max_absent()) + " pairs, cap " + std::to_string(max_defect));

    ClaimsAudit audit;
    audit.t = pc.order();
    SimpleGraph blue = pc.blue();
    audit.max_red_connected_matching = connected_matching_number(pc.red).size;
    for (int v = 0; v < audit.t; ++v)
        audit.max_blue_fan_blades =
            std::max(audit.max_blue_fan_blades, matching_number_within(blue, blue.row(v)));
    audit.min_red_degree = pc.red.min_degree();
    audit.red_two_connected = is_two_connected(pc.red).two_connected;
    bool circ_ok = true;
    for (const auto& comp : components(pc.red))
        if (int(comp.size()) > kExactCycleComponentLimit) circ_ok = false;
    if (circ_ok) audit.red_circumference = circumference(pc.red).length;

    Rational t_r(audit.t, 1);
    Rational cm_threshold =
        (regime == ClaimsRegime::part_one ? a / (Rational(2, 1) * a + Rational(2, 1))
                                          : Rational(1, 4));
    cm_threshold = (cm_threshold - Rational(3, 20) * beta) * t_r;
    Rational fan_threshold =
        (regime == ClaimsRegime::part_one
             ? Rational(1, 1) / (Rational(2, 1) * a + Rational(2, 1))
             : Rational(1, 1) / (Rational(4, 1) * a));
    fan_threshold = (fan_threshold - Rational(1, 20) * beta) * t_r;
    Rational deg_threshold =
        (regime == ClaimsRegime::part_one
             ? a / (Rational(2, 1) * a + Rational(2, 1))
             : (Rational(2, 1) * a - Rational(1, 1)) / (Rational(4, 1) * a));
    deg_threshold = deg_threshold * t_r + Rational(1, 1);

    auto add = [&](const std::string& name, const Rational& threshold, long long quantity,
                   bool satisfied) {
        audit.evaluations.push_back({name, threshold.str(), quantity, satisfied});
    };
    add("red-connected-matching-at-most", cm_threshold, audit.max_red_connected_matching,
        Rational(audit.max_red_connected_matching, 1) <= cm_threshold);
    add("blue-fan-blades-below", fan_threshold, audit.max_blue_fan_blades,
        Rational(audit.max_blue_fan_blades, 1) < fan_threshold);
    add("min-red-degree-at-least", deg_threshold, audit.min_red_degree,
        Rational(audit.min_red_degree, 1) >= deg_threshold);
    add("red-two-connected", Rational(1, 1), audit.red_two_connected ? 1 : 0,
        audit.red_two_connected);
    return audit;
}

DiracChainReport dirac_chain_check(const SimpleGraph& g) {
    DiracChainReport rep;
    TwoConnectivity tc = is_two_connected(g);
    rep.two_connected = tc.two_connected;
    rep.min_degree = g.min_degree();
    rep.bound = std::min(2 * rep.min_degree, g.order());
    CircumferenceResult c = circumference(g);
    rep.circumference = c.length;
    rep.connected_matching = connected_matching_number(g).size;
    if (rep.two_connected) rep.dirac_holds = rep.circumference >= rep.bound;
    rep.matching_bound_holds = rep.connected_matching >= rep.circumference / 2;
    rep.violated = !(rep.dirac_holds && rep.matching_bound_holds);
    return rep;
}

}  // namespace ramsey
