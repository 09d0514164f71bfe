#pragma once

#include <optional>
#include <string>
#include <vector>

#include "constructions.hpp"
#include "cycles.hpp"
#include "graph.hpp"
#include "matching.hpp"
#include "rational.hpp"

namespace ramsey {

// A red/blue coloring of the edges of an arbitrary host graph; pairs outside
// the host are "absent" and count as non-edges in both color projections.
// Models the reduced graph left by the regularity method, where each vertex
// misses only a bounded number of pairs.
struct PartialTwoColoring {
    SimpleGraph host;
    SimpleGraph red;  // subgraph of host

    PartialTwoColoring() = default;
    PartialTwoColoring(SimpleGraph host_graph, SimpleGraph red_graph);

    int order() const { return host.order(); }
    SimpleGraph blue() const;              // host minus red
    int absent_count(int v) const;         // pairs at v outside the host
    int max_absent() const;
};

struct ComponentLemmaReport {
    bool hypothesis_met = false;  // delta(host) >= 3n/4
    std::string note;
    int n = 0;
    int min_degree = 0;
    std::string color;  // "red" or "blue"
    VertexSet component;
    bool violated = false;  // no monochromatic component of order > delta: a bug
};

ComponentLemmaReport check_component_lemma(const PartialTwoColoring& pc);

struct FigajLuczakReport {
    bool hypothesis_met = false;
    std::string note;
    Rational eps{1, 200};
    long long edges = 0;
    long long required_edges = 0;  // ceil((1 - eps) |V1| |V2|)
    long long component_threshold = 0;
    long long matching_threshold = 0;
    VertexSet component;
    int matching_size = 0;
    bool violated = false;
};

// Hypothesis: g bipartite between v1 and v2 (|V1| >= |V2|), 0 < eps < 1/100,
// e(g) >= (1 - eps)|V1||V2|. Conclusion: a component with at least
// (1-3eps)(|V1|+|V2|) vertices containing a matching of size >= (1-3eps)|V2|.
FigajLuczakReport check_figaj_luczak(const SimpleGraph& g, const VertexSet& v1,
                                     const VertexSet& v2, const Rational& eps);

struct StarMatchingReport {
    int k = 0, n1 = 0, n2 = 0;
    long long formula_value = 0;
    bool arrows_at_value = false;       // every 3-coloring of K_value hits a target
    bool good_coloring_below = false;   // K_{value-1} admits a coloring missing all three
    std::vector<std::uint8_t> witness;  // color (1..3) per pair of K_{value-1}, column-major
    std::uint64_t nodes = 0;
    bool violated = false;  // either direction failed: formula contradicted
};

// Exhaustive 3-coloring confirmation of R(S_k, n1 K_2, n2 K_2) = 2 n1 + n2 - 1
// for the k <= n1 branch, at desk scale.
StarMatchingReport check_star_matching_small(int k, int n1, int n2,
                                             double budget_seconds = -1);

enum class ClaimsRegime { part_one, part_two };

struct ClaimEvaluation {
    std::string name;
    std::string threshold;  // exact rational, as text
    long long quantity = 0;
    bool satisfied = false;
};

struct ClaimsAudit {
    int t = 0;
    int max_red_connected_matching = 0;
    int max_blue_fan_blades = 0;
    int min_red_degree = 0;
    bool red_two_connected = false;
    int red_circumference = -1;  // -1 when beyond the exact limit
    std::vector<ClaimEvaluation> evaluations;
};

// Diagnostic only: computes the audited quantities exactly and evaluates each
// claim threshold at the given t, a, beta. Never asserts the claims as
// theorems at small t.
ClaimsAudit claims_audit(const PartialTwoColoring& pc, const Rational& a, const Rational& beta,
                         ClaimsRegime regime, int max_defect);

struct DiracChainReport {
    bool two_connected = false;
    int min_degree = 0;
    int bound = 0;  // min(2 delta, n)
    int circumference = 0;
    int connected_matching = 0;
    bool dirac_holds = true;       // when 2-connected
    bool matching_bound_holds = true;  // cm >= floor(c/2), always
    bool violated = false;
};

// The implication chain closing the argument: Dirac's bound on a 2-connected
// graph, then alternate cycle edges as a connected matching.
DiracChainReport dirac_chain_check(const SimpleGraph& g);

}  // namespace ramsey
