#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "graph.hpp"

namespace ramsey {

// Pairwise vertex-disjoint edges of the ambient graph, kept sorted as
// normalized (u < v) pairs in lexicographic order.
struct Matching {
    std::vector<std::pair<int, int>> edges;
    int size() const { return int(edges.size()); }
};

// Fan rooted at `center`: each blade (x, y) forms a triangle with the center,
// blades pairwise vertex-disjoint and none contains the center.
struct FanEmbedding {
    int center = -1;
    std::vector<std::pair<int, int>> blades;
    int blade_count() const { return int(blades.size()); }
};

// Berge-Tutte certificate: q(G \ S) - |S| = deficiency = |V| - 2 nu(G).
struct DeficiencyWitness {
    int deficiency = 0;
    VertexSet witness_set;
};

struct HallResult {
    int deficiency = 0;   // max over S of |S| - |N(S)|, clamped at >= 0
    VertexSet violator;   // subset of X attaining it (empty when deficiency 0)
};

struct ConnectedMatching {
    int size = 0;
    VertexSet component;
};

// nu(G) by augmenting paths with blossom contraction. Deterministic: greedy
// seed and BFS both scan vertices ascending.
int matching_number(const SimpleGraph& g);

// nu restricted to the induced subgraph on the vertices of `allowed`
// (row_words() words), without materializing the induced graph.
int matching_number_within(const SimpleGraph& g, const std::uint64_t* allowed);

// Maximum matching with ties broken by lexicographically smallest edge list,
// so reported witnesses are unique per graph.
Matching max_matching(const SimpleGraph& g);
Matching max_matching_within(const SimpleGraph& g, const std::uint64_t* allowed);

DeficiencyWitness berge_deficiency(const SimpleGraph& g);

// Requires every edge of g to join x and y. Postcondition nu = |X| - d.
HallResult hall_deficiency(const SimpleGraph& g, const VertexSet& x, const VertexSet& y);

std::pair<int, FanEmbedding> max_fan_blades(const SimpleGraph& g, int v);
int fan_blades_count(const SimpleGraph& g, int v);
std::optional<FanEmbedding> find_fan(const SimpleGraph& g, int n_blades);

ConnectedMatching connected_matching_number(const SimpleGraph& g);

bool validate_matching(const SimpleGraph& g, const Matching& m);
bool validate_fan(const SimpleGraph& g, const FanEmbedding& f);

}  // namespace ramsey
