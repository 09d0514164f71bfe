#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coloring.hpp"

namespace ramsey {

inline constexpr int kMaxSearchVertices = 40;

struct SearchOptions {
    double budget_seconds = -1;  // < 0: unlimited
    int threads = 1;
    bool pruning = true;     // symmetry pruning; structural pruning is always on
    int split_vertex = 5;    // branch on surviving prefixes over this many vertices
    std::string resume_path;      // frontier checkpoint to continue from
    std::string checkpoint_path;  // written when the budget runs out
};

enum class SearchOutcome { arrows, good_coloring, exact_value, budget_exhausted };

struct SearchQuestion {
    enum class Kind { arrows, exact } kind = Kind::arrows;
    int n = 0;  // arrows: the order being tested
    int cycle = 3;
    int fan = 1;
    int max_n = 0;  // exact: the search cap
};

struct SearchReport {
    SearchQuestion question;
    SearchOutcome outcome = SearchOutcome::arrows;
    std::optional<TwoColoring> witness;  // good coloring, verified
    long long value = -1;                // exact outcome
    std::uint64_t nodes_expanded = 0;
    double wall_seconds = 0;
    double budget_seconds = -1;
    int threads = 1;
    bool pruning = true;
    int split_vertex = 5;
    std::uint64_t branches_total = 0;
    std::uint64_t branches_completed = 0;
    std::string checkpoint_written;  // path, when a frontier was serialized
};

// Does every red/blue coloring of K_n contain a red C_m or a blue F_fan?
// Depth-first search in vertex-extension order with incremental forbidden-
// structure checks; symmetry pruning never affects soundness, only speed.
SearchReport arrows_search(int n, int cycle_len, int fan_blades, const SearchOptions& opts = {});

// Smallest N <= max_n with arrows(N) = true, plus the good coloring at N-1.
SearchReport ramsey_exact_search(int cycle_len, int fan_blades, int max_n,
                                 const SearchOptions& opts = {});

struct AuditReport {
    int n = 0, cycle = 0, fan = 0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    bool exhaustive = false;
    std::uint64_t with_red_cycle = 0;
    std::uint64_t with_blue_fan = 0;
    std::uint64_t with_either = 0;
    std::uint64_t good_colorings = 0;
    std::vector<TwoColoring> counterexamples;  // kept up to a small cap, certified
    double fraction() const {
        return samples == 0 ? 1.0 : double(with_either) / double(samples);
    }
};

// Samples uniformly random colorings (or sweeps all of them with exhaustive =
// true) and reports how many contain a target structure. Any good coloring
// found is a certified refutation and is returned.
AuditReport random_coloring_audit(int n, int cycle_len, int fan_blades, std::uint64_t samples,
                                  std::uint64_t seed, bool exhaustive = false);

}  // namespace ramsey
