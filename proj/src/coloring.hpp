#pragma once

#include <string>
#include <string_view>

#include "graph.hpp"

namespace ramsey {

inline constexpr std::string_view kColoringHeader = "RAMSEY-COLORING v1";

// Red/blue edge coloring of K_n. Only the red graph is stored; blue is always
// derived as the complement, so the partition invariant cannot be violated at
// runtime.
class TwoColoring {
public:
    TwoColoring() = default;
    explicit TwoColoring(SimpleGraph red) : red_(std::move(red)) {}

    int order() const { return red_.order(); }
    const SimpleGraph& red() const { return red_; }
    SimpleGraph blue() const { return complement(red_); }
    bool red_edge(int u, int v) const { return red_.adjacent(u, v); }

    // RAMSEY-COLORING v1: header line, then the graph6 string of the red
    // graph. UTF-8, LF line endings.
    static TwoColoring parse(std::string_view text);
    std::string format() const;
    static TwoColoring read_file(const std::string& path);
    void write_file(const std::string& path) const;

    bool operator==(const TwoColoring&) const = default;

private:
    SimpleGraph red_;
};

}  // namespace ramsey
