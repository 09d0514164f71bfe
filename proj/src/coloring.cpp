#include "coloring.hpp"

#include <fstream>
#include <sstream>

namespace ramsey {

TwoColoring TwoColoring::parse(std::string_view text) {
    // Normalize CRLF defensively but require the documented layout.
    std::string_view rest = text;
    auto take_line = [&](bool required) -> std::string_view {
        if (rest.empty()) {
            require(!required, Errc::parse, "coloring file truncated");
            return {};
        }
        auto nl = rest.find('\n');
        std::string_view line = nl == std::string_view::npos ? rest : rest.substr(0, nl);
        rest = nl == std::string_view::npos ? std::string_view{} : rest.substr(nl + 1);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        return line;
    };
    std::string_view header = take_line(true);
    require(header == kColoringHeader, Errc::parse,
            "expected header '" + std::string(kColoringHeader) + "'");
    std::string_view g6 = take_line(true);
    require(!g6.empty(), Errc::parse, "missing graph6 line");
    while (!rest.empty()) {
        std::string_view extra = take_line(false);
        require(extra.empty(), Errc::parse, "unexpected content after graph6 line");
    }
    return TwoColoring(parse_graph6(g6));
}

std::string TwoColoring::format() const {
    std::string out(kColoringHeader);
    out.push_back('\n');
    out += write_graph6(red_);
    out.push_back('\n');
    return out;
}

TwoColoring TwoColoring::read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    require(bool(in), Errc::io, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

void TwoColoring::write_file(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    require(bool(out), Errc::io, "cannot write '" + path + "'");
    out << format();
    require(bool(out), Errc::io, "write failed for '" + path + "'");
}

}  // namespace ramsey
