#include "inversion/io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace inversion {

OrientedGraph parse_digraph(std::istream& in) {
    std::string line;
    int lineno = 0;
    int n = -1;
    std::vector<std::pair<int, int>> arcs;
    std::vector<int> arc_lines;
    while (std::getline(in, line)) {
        ++lineno;
        size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        std::istringstream ss(line);
        std::string tag;
        ss >> tag;
        if (tag == "n") {
            if (n >= 0) throw ParseError(lineno, "duplicate order line");
            if (!(ss >> n) || n < 0) throw ParseError(lineno, "expected `n <count>`");
        } else if (tag == "a") {
            int u, v;
            if (!(ss >> u >> v)) throw ParseError(lineno, "expected `a <u> <v>`");
            if (n < 0) throw ParseError(lineno, "arc before order line");
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw ParseError(lineno, "vertex out of range");
            arcs.emplace_back(u, v);
            arc_lines.push_back(lineno);
        } else {
            throw ParseError(lineno, "unknown directive `" + tag + "`");
        }
    }
    if (n < 0) throw ParseError(lineno, "missing order line");
    OrientedGraph g(n);
    for (size_t i = 0; i < arcs.size(); ++i) {
        auto [u, v] = arcs[i];
        if (g.arc(u, v)) throw ParseError(arc_lines[i], "duplicate arc");
        try {
            g.add_arc(u, v);
        } catch (const std::invalid_argument& e) {
            throw ParseError(arc_lines[i], e.what());
        }
    }
    return g;
}

OrientedGraph parse_digraph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_digraph(in);
}

void render_digraph(const OrientedGraph& g, std::ostream& out) {
    out << "n " << g.order() << "\n";
    for (auto [u, v] : g.arcs()) out << "a " << u << " " << v << "\n";
}

std::string render_digraph(const OrientedGraph& g) {
    std::ostringstream ss;
    render_digraph(g, ss);
    return ss.str();
}

void to_dot(const OrientedGraph& g, std::ostream& out, const InversionFamily* family) {
    static const char* palette[] = {"red",    "blue",   "forestgreen", "darkorange",
                                    "purple", "brown",  "deeppink",    "teal"};
    out << "digraph G {\n";
    for (int v = 0; v < g.order(); ++v) out << "  " << v << ";\n";
    for (auto [u, v] : g.arcs()) {
        int color = -1;
        if (family) {
            // parity over sets containing both endpoints; last such set wins
            // the color
            int flips = 0;
            for (int i = 0; i < family->length(); ++i) {
                const Bitset& x = family->sets[i];
                if (x.test(u) && x.test(v)) {
                    ++flips;
                    color = i;
                }
            }
            if (flips == 0) color = -1;
        }
        out << "  " << u << " -> " << v;
        if (color >= 0)
            out << " [color=" << palette[color % 8] << "]";
        out << ";\n";
    }
    out << "}\n";
}

} // namespace inversion
