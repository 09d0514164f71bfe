#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coloring.hpp"
#include "cycles.hpp"
#include "matching.hpp"
#include "rational.hpp"

namespace ramsey {

enum class Family { W1, W2, W3, W4, W5 };

Family family_from_string(std::string_view name);  // "w1".."w5", case-insensitive
std::string family_name(Family f);

// Parameter regimes: W1 needs 1/2 <= a < 1, W2 needs 2/5 <= a < 1/2,
// W3 needs 0 < a < 2/5, W4 needs a >= 1. W5 ignores a (its red cycle target
// is C_3).
struct ConstructionSpec {
    Family family = Family::W1;
    Rational a{1, 2};
    long long n = 2;
};

long long floor_an(const Rational& a, long long n);

// Piecewise lower bound for R(C_{2 floor(an)}, F_n):
//   a >= 1        -> 4 floor(an) - 1
//   1/2 <= a < 1  -> 2 floor(an) + 2n - 4
//   2/5 <= a <1/2 -> 6 floor(an) - 2
//   0 < a < 2/5   -> floor(an) + 2n
long long lower_bound_value(const Rational& a, long long n);

// Coefficient of n in the asymptotic value: 2 + 2a on [1/2, 1), 4a at a >= 1.
// Rejects a < 1/2 (not covered).
Rational asymptotic_main_term(const Rational& a);

// Red cycle length / blue fan blade targets certified by the family.
std::pair<int, int> witness_targets(const ConstructionSpec& spec);
// N+1 where N is the witness order: the Ramsey lower bound the family shows.
long long witness_lower_bound(const ConstructionSpec& spec);

TwoColoring build_witness(const ConstructionSpec& spec);

enum class Verdict { avoids, contains_red_cycle, contains_blue_fan };

struct RedComponentSummary {
    int size = 0;
    int circumference = -1;  // -1 when not needed for the verdict
    std::string structure;   // clique / complete-split / complete-bipartite / bipartite / general
};

struct Certificate {
    Verdict verdict = Verdict::avoids;
    int n = 0;
    int target_cycle = 0;
    int target_fan = 0;
    std::vector<RedComponentSummary> red_components;
    std::string red_path;   // which detection path decided the red side
    std::string blue_path;  // which detection path decided the blue side
    std::vector<int> blade_counts;  // per center, on the avoids / blue-fan paths
    int max_blades = 0;
    std::optional<CycleEmbedding> red_cycle;  // embedded counterexamples
    std::optional<FanEmbedding> blue_fan;
};

// Verdict "avoids" iff the coloring has no red cycle of length exactly m and
// no blue fan with n_fan blades. Structured colorings (red components that are
// cliques, complete splits or complete bipartite graphs; unions of cliques on
// either side; triangle-free blue graphs) are certified by closed formulas;
// everything else falls back to the exact detectors.
Certificate verify_witness(const TwoColoring& c, int m, int n_fan);

struct TableRow {
    Rational a;
    long long floor_an = 0;
    long long lower_bound = 0;
    std::optional<Rational> main_term_times_n;
    std::optional<Rational> relative_gap;  // (main term * n - lower bound) / n
};

std::vector<TableRow> asymptotic_table(const std::vector<Rational>& a_list, long long n);

// R(S_k, n1 K_2, n2 K_2) = 2 n1 + n2 - 1 for k <= n1. The k > n1 branch is
// stated in the source with an undefined symbol; callers must opt in to the
// t = k reading explicitly.
long long star_matching_ramsey(int k, int n1, int n2, bool interpret_k_above_n1 = false);

struct LiteratureResult {
    std::string family;
    long long value = 0;
    std::string condition;  // the validity condition the formula was quoted with
    bool asymptotic_only = false;  // true when validity is "sufficiently large n"
};

// Families: "c3-fan" (n >= 2), "odd-cycle-fan" (C_{2m+1} vs F_n, fixed m,
// large n), "cycle-vs-fan" (C_n vs F_m, n > 3m), "fan-fan" (fixed m, large n).
LiteratureResult literature_value(std::string_view family, long long n, long long m);

}  // namespace ramsey
