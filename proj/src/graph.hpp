#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"

namespace ramsey {

// Sorted ascending, no duplicates, all members in [0, n) of the ambient graph.
using VertexSet = std::vector<int>;

// Undirected loopless graph on vertices 0..n-1. Adjacency is a packed bit
// matrix, one row per vertex, so pair queries are O(1) and neighborhood
// operations run one word at a time. Instances are immutable after
// construction and safe to share across threads.
class SimpleGraph {
public:
    SimpleGraph() = default;

    static SimpleGraph empty(int n);
    static SimpleGraph complete(int n);
    static SimpleGraph from_edges(int n, std::span<const std::pair<int, int>> edges);
    static SimpleGraph cycle(int n);
    static SimpleGraph path(int n);
    static SimpleGraph complete_bipartite(int a, int b);

    int order() const { return n_; }
    int row_words() const { return words_; }
    long long edge_count() const;
    bool adjacent(int u, int v) const {
        return (row(u)[v >> 6] >> (v & 63)) & 1;
    }
    int degree(int v) const;
    int min_degree() const;
    int max_degree() const;
    const std::uint64_t* row(int v) const { return bits_.data() + size_t(v) * words_; }
    std::vector<int> neighbors(int v) const;
    std::vector<std::pair<int, int>> edges() const;  // lexicographic (u < v)

    bool operator==(const SimpleGraph&) const = default;

private:
    friend class GraphBuilder;
    int n_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> bits_;
};

class GraphBuilder {
public:
    explicit GraphBuilder(int n);
    void add_edge(int u, int v);  // self-loops rejected, duplicates ignored
    bool has_edge(int u, int v) const { return g_.adjacent(u, v); }
    int order() const { return g_.order(); }
    SimpleGraph build() && { return std::move(g_); }

private:
    SimpleGraph g_;
};

SimpleGraph complement(const SimpleGraph& g);

// Second element maps new index -> original vertex, for translating witnesses
// found in the induced graph back to the ambient one.
std::pair<SimpleGraph, std::vector<int>> induced_subgraph(const SimpleGraph& g,
                                                          const VertexSet& s);

// Keeps exactly the edges of g with one end in a and the other in b.
SimpleGraph bipartite_between(const SimpleGraph& g, const VertexSet& a, const VertexSet& b);

// Partition into maximal connected vertex sets, sorted by decreasing size
// then lexicographically.
std::vector<VertexSet> components(const SimpleGraph& g);

bool is_connected(const SimpleGraph& g);
bool is_triangle_free(const SimpleGraph& g);

// Proper 2-coloring (per component the side of vertex min(comp) is part 0);
// nullopt when an odd cycle exists.
std::optional<std::pair<VertexSet, VertexSet>> bipartition(const SimpleGraph& g);

// graph6 codec, bit-exact per the standard format: short form for n <= 62,
// three-byte long form up to n = 258047. The very long form is not needed at
// the sizes this tool handles and is rejected.
SimpleGraph parse_graph6(std::string_view text);
std::string write_graph6(const SimpleGraph& g);

namespace bits {

inline int words_for(int n) { return (n + 63) >> 6; }

inline bool test(const std::uint64_t* w, int i) { return (w[i >> 6] >> (i & 63)) & 1; }
inline void set(std::uint64_t* w, int i) { w[i >> 6] |= std::uint64_t(1) << (i & 63); }
inline void clear(std::uint64_t* w, int i) { w[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }

int popcount(const std::uint64_t* w, int words);

// Smallest set bit >= from, or -1.
inline int next_set_bit(const std::uint64_t* w, int words, int from) {
    if (from >= words * 64) return -1;
    int k = from >> 6;
    std::uint64_t x = w[k] & (~std::uint64_t(0) << (from & 63));
    while (true) {
        if (x) return k * 64 + __builtin_ctzll(x);
        if (++k >= words) return -1;
        x = w[k];
    }
}

// Calls fn(i) for every set bit, ascending.
template <class Fn>
void for_each(const std::uint64_t* w, int words, Fn&& fn) {
    for (int k = 0; k < words; ++k) {
        std::uint64_t x = w[k];
        while (x) {
            int b = __builtin_ctzll(x);
            fn(k * 64 + b);
            x &= x - 1;
        }
    }
}

}  // namespace bits

}  // namespace ramsey
