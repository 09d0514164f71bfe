#include "graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>

namespace ramsey {

namespace bits {

int popcount(const std::uint64_t* w, int words) {
    int c = 0;
    for (int k = 0; k < words; ++k) c += std::popcount(w[k]);
    return c;
}

}  // namespace bits

namespace {

void check_vertex(const SimpleGraph& g, int v) {
    if (v < 0 || v >= g.order()) [[unlikely]]
        fail(Errc::invalid_argument, "vertex " + std::to_string(v) + " out of range [0," +
                                         std::to_string(g.order()) + ")");
}

}  // namespace

GraphBuilder::GraphBuilder(int n) {
    require(n >= 0, Errc::invalid_argument, "negative vertex count");
    g_.n_ = n;
    g_.words_ = bits::words_for(n);
    g_.bits_.assign(size_t(n) * g_.words_, 0);
}

void GraphBuilder::add_edge(int u, int v) {
    check_vertex(g_, u);
    check_vertex(g_, v);
    if (u == v) [[unlikely]]
        fail(Errc::invalid_argument, "self-loop at vertex " + std::to_string(u));
    bits::set(g_.bits_.data() + size_t(u) * g_.words_, v);
    bits::set(g_.bits_.data() + size_t(v) * g_.words_, u);
}

SimpleGraph SimpleGraph::empty(int n) { return GraphBuilder(n).build(); }

SimpleGraph SimpleGraph::complete(int n) {
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) b.add_edge(u, v);
    return std::move(b).build();
}

SimpleGraph SimpleGraph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
    GraphBuilder b(n);
    for (auto [u, v] : edges) b.add_edge(u, v);
    return std::move(b).build();
}

SimpleGraph SimpleGraph::cycle(int n) {
    require(n >= 3, Errc::invalid_argument, "cycle needs at least 3 vertices");
    GraphBuilder b(n);
    for (int i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
    return std::move(b).build();
}

SimpleGraph SimpleGraph::path(int n) {
    GraphBuilder b(n);
    for (int i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1);
    return std::move(b).build();
}

SimpleGraph SimpleGraph::complete_bipartite(int a, int b) {
    GraphBuilder g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
    return std::move(g).build();
}

long long SimpleGraph::edge_count() const {
    long long twice = 0;
    for (int v = 0; v < n_; ++v) twice += degree(v);
    return twice / 2;
}

int SimpleGraph::degree(int v) const {
    check_vertex(*this, v);
    return bits::popcount(row(v), words_);
}

int SimpleGraph::min_degree() const {
    int d = n_ == 0 ? 0 : n_;
    for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
    return d;
}

int SimpleGraph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

std::vector<int> SimpleGraph::neighbors(int v) const {
    check_vertex(*this, v);
    std::vector<int> out;
    bits::for_each(row(v), words_, [&](int u) { out.push_back(u); });
    return out;
}

std::vector<std::pair<int, int>> SimpleGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        bits::for_each(row(u), words_, [&](int v) {
            if (v > u) out.emplace_back(u, v);
        });
    return out;
}

SimpleGraph complement(const SimpleGraph& g) {
    int n = g.order();
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) b.add_edge(u, v);
    return std::move(b).build();
}

std::pair<SimpleGraph, std::vector<int>> induced_subgraph(const SimpleGraph& g,
                                                          const VertexSet& s) {
    std::vector<int> map(s.begin(), s.end());
    std::vector<int> inv(g.order(), -1);
    for (size_t i = 0; i < map.size(); ++i) {
        check_vertex(g, map[i]);
        require(inv[map[i]] == -1, Errc::invalid_argument, "duplicate vertex in set");
        inv[map[i]] = int(i);
    }
    GraphBuilder b(int(map.size()));
    for (size_t i = 0; i < map.size(); ++i)
        for (size_t j = i + 1; j < map.size(); ++j)
            if (g.adjacent(map[i], map[j])) b.add_edge(int(i), int(j));
    return {std::move(b).build(), std::move(map)};
}

SimpleGraph bipartite_between(const SimpleGraph& g, const VertexSet& a, const VertexSet& b) {
    std::vector<char> in_a(g.order(), 0), in_b(g.order(), 0);
    for (int v : a) {
        check_vertex(g, v);
        in_a[v] = 1;
    }
    for (int v : b) {
        check_vertex(g, v);
        require(!in_a[v], Errc::invalid_argument,
                "vertex sets overlap at " + std::to_string(v));
        in_b[v] = 1;
    }
    GraphBuilder out(g.order());
    for (auto [u, v] : g.edges())
        if ((in_a[u] && in_b[v]) || (in_a[v] && in_b[u])) out.add_edge(u, v);
    return std::move(out).build();
}

std::vector<VertexSet> components(const SimpleGraph& g) {
    int n = g.order();
    int W = g.row_words();
    std::vector<std::uint64_t> seen(W, 0);
    std::vector<VertexSet> comps;
    std::vector<std::uint64_t> frontier(W), reach(W), next(W);
    for (int v = 0; v < n; ++v) {
        if (bits::test(seen.data(), v)) continue;
        std::fill(reach.begin(), reach.end(), 0);
        bits::set(reach.data(), v);
        std::fill(frontier.begin(), frontier.end(), 0);
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
                std::uint64_t fresh = next[k] & ~reach[k];
                if (fresh) grew = true;
                frontier[k] = fresh;
                reach[k] |= fresh;
            }
        }
        VertexSet comp;
        bits::for_each(reach.data(), W, [&](int u) { comp.push_back(u); });
        for (int k = 0; k < W; ++k) seen[k] |= reach[k];
        comps.push_back(std::move(comp));
    }
    std::sort(comps.begin(), comps.end(), [](const VertexSet& a, const VertexSet& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a < b;
    });
    return comps;
}

bool is_connected(const SimpleGraph& g) {
    int n = g.order();
    if (n == 0) return true;
    int W = g.row_words();
    thread_local std::vector<std::uint64_t> reach, frontier, next;
    reach.assign(W, 0);
    frontier.assign(W, 0);
    next.assign(W, 0);
    bits::set(reach.data(), 0);
    bits::set(frontier.data(), 0);
    bool grew = true;
    while (grew) {
        grew = false;
        std::fill(next.begin(), next.end(), 0);
        bits::for_each(frontier.data(), W, [&](int u) {
            const std::uint64_t* r = g.row(u);
            for (int k = 0; k < W; ++k) next[k] |= r[k];
        });
        for (int k = 0; k < W; ++k) {
            std::uint64_t fresh = next[k] & ~reach[k];
            if (fresh) grew = true;
            frontier[k] = fresh;
            reach[k] |= fresh;
        }
    }
    return bits::popcount(reach.data(), W) == n;
}

bool is_triangle_free(const SimpleGraph& g) {
    int W = g.row_words();
    for (auto [u, v] : g.edges()) {
        const std::uint64_t* ru = g.row(u);
        const std::uint64_t* rv = g.row(v);
        for (int k = 0; k < W; ++k)
            if (ru[k] & rv[k]) return false;
    }
    return true;
}

std::optional<std::pair<VertexSet, VertexSet>> bipartition(const SimpleGraph& g) {
    int n = g.order();
    std::vector<int> side(n, -1);
    std::deque<int> q;
    for (int s = 0; s < n; ++s) {
        if (side[s] != -1) continue;
        side[s] = 0;
        q.push_back(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            for (int v : g.neighbors(u)) {
                if (side[v] == -1) {
                    side[v] = side[u] ^ 1;
                    q.push_back(v);
                } else if (side[v] == side[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    VertexSet a, b;
    for (int v = 0; v < n; ++v) (side[v] == 0 ? a : b).push_back(v);
    return std::make_pair(std::move(a), std::move(b));
}

// ---------------------------------------------------------------------------
// graph6
//
// Layout: N(n) followed by the upper triangle of the adjacency matrix in
// column-major order x(0,1) x(0,2) x(1,2) x(0,3) ..., packed big-endian into
// 6-bit groups, each group + 63, zero-padded to a multiple of 6 bits.
// ---------------------------------------------------------------------------

namespace {

constexpr std::string_view kG6Prefix = ">>graph6<<";

long long g6_body_bytes(long long n) {
    long long pairs = n * (n - 1) / 2;
    return (pairs + 5) / 6;
}

}  // namespace

std::string write_graph6(const SimpleGraph& g) {
    long long n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(char(63 + n));
    } else if (n <= 258047) {
        out.push_back(char(126));
        out.push_back(char(63 + ((n >> 12) & 63)));
        out.push_back(char(63 + ((n >> 6) & 63)));
        out.push_back(char(63 + (n & 63)));
    } else {
        fail(Errc::unsupported, "graph6 very long form (n >= 258048) not supported");
    }
    int acc = 0, nbits = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(char(63 + acc));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(char(63 + (acc << (6 - nbits))));
    return out;
}

SimpleGraph parse_graph6(std::string_view text) {
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' '))
        text.remove_suffix(1);
    if (text.substr(0, kG6Prefix.size()) == kG6Prefix) text.remove_prefix(kG6Prefix.size());
    require(!text.empty(), Errc::parse, "empty graph6 string");
    if (text.front() == ':' || text.front() == ';')
        fail(Errc::parse, "sparse6 input is not supported");
    if (text.front() == '&') fail(Errc::parse, "digraph6 input is not supported");

    size_t pos = 0;
    auto take = [&]() -> int {
        require(pos < text.size(), Errc::parse, "graph6 string truncated");
        unsigned char c = text[pos++];
        require(c >= 63 && c <= 126, Errc::parse,
                "graph6 byte out of range at position " + std::to_string(pos - 1));
        return c - 63;
    };

    long long n;
    int first = take();
    if (first < 63) {
        n = first;
    } else {
        // first == 63 means the escape byte 126
        require(pos < text.size(), Errc::parse, "graph6 header truncated");
        if ((unsigned char)text[pos] == 126)
            fail(Errc::unsupported, "graph6 very long form (n >= 258048) not supported");
        long long a = take(), b = take(), c = take();
        n = (a << 12) | (b << 6) | c;
    }

    long long body = g6_body_bytes(n);
    require((long long)(text.size() - pos) == body, Errc::parse,
            "graph6 length mismatch: expected " + std::to_string(body) + " body bytes, got " +
                std::to_string(text.size() - pos));

    GraphBuilder gb(static_cast<int>(n));
    int acc = 0, nbits = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            if (nbits == 0) {
                acc = take();
                nbits = 6;
            }
            if ((acc >> (nbits - 1)) & 1) gb.add_edge(u, v);
            --nbits;
        }
    }
    if (nbits > 0 && (acc & ((1 << nbits) - 1)) != 0)
        fail(Errc::parse, "graph6 trailing padding bits are nonzero");
    return std::move(gb).build();
}

}  // namespace ramsey
