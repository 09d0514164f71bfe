#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "graph.hpp"

namespace ramsey {

// Exact longest-cycle machinery works per connected component, up to this many
// vertices; a dynamic program over vertex subsets stays within seconds there.
inline constexpr int kExactCycleComponentLimit = 24;

struct CycleEmbedding {
    std::vector<int> vertices;  // closed walk order; last is adjacent to first
    int length() const { return int(vertices.size()); }
};

bool validate_cycle(const SimpleGraph& g, const CycleEmbedding& c);

// Shortest cycle with witness; nullopt iff acyclic.
std::optional<std::pair<int, CycleEmbedding>> girth(const SimpleGraph& g);

struct CircumferenceOptions {
    bool allow_heuristic = false;  // oversized components get a lower bound
};

struct CircumferenceResult {
    int length = 0;  // 0 with no witness iff acyclic (convention)
    std::optional<CycleEmbedding> cycle;
    bool exact = true;
};

CircumferenceResult circumference(const SimpleGraph& g, CircumferenceOptions opts = {});

// Witness of a cycle of length exactly k, or nullopt. Exactness limits as
// circumference.
std::optional<CycleEmbedding> has_cycle_of_length(const SimpleGraph& g, int k);

// All lengths k such that g has a cycle of length k.
std::set<int> cycle_spectrum(const SimpleGraph& g);

struct TwoConnectivity {
    bool two_connected = false;
    bool connected = false;
    std::optional<int> cut_vertex;  // set when connected but not 2-connected
};

// Graphs with n < 3 are 2-connected: false by convention.
TwoConnectivity is_two_connected(const SimpleGraph& g);

struct DiracReport {
    bool hypothesis_met = false;  // 2-connected, n >= 3
    std::string hypothesis_note;
    int min_degree = 0;
    int bound = 0;  // min(2 delta, n)
    int circumference = 0;
    std::optional<CycleEmbedding> witness;
    bool holds = true;  // conclusion c >= bound, when hypothesis met
};

DiracReport check_dirac(const SimpleGraph& g);

enum class BondyVerdict { pancyclic, exception_krr, hypothesis_not_met, violated };

struct BondyReport {
    BondyVerdict verdict = BondyVerdict::hypothesis_not_met;
    int min_degree = 0;
    std::set<int> spectrum;  // filled except for the K_{r,r} exception
};

BondyReport check_bondy(const SimpleGraph& g);

}  // namespace ramsey
