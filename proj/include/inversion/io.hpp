#ifndef inversion_io_hpp
#define inversion_io_hpp

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "inversion/digraph.hpp"

namespace inversion {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

// Text format: first line `n <count>`, then one `a <u> <v>` per arc,
// 0-indexed. Blank lines and lines starting with `#` are ignored.
OrientedGraph parse_digraph(std::istream& in);
OrientedGraph parse_digraph_file(const std::string& path);
void render_digraph(const OrientedGraph& g, std::ostream& out);
std::string render_digraph(const OrientedGraph& g);

// DOT export. When a family is given, arcs flipped by set i relative to the
// applied graph are colored by family index (presentation only).
void to_dot(const OrientedGraph& g, std::ostream& out, const InversionFamily* family = nullptr);

} // namespace inversion

#endif
