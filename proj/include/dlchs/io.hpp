#pragma once

#include <istream>
#include <ostream>
#include <sstream>

#include "dlchs/transform.hpp"

namespace dlchs {

struct parse_error : std::runtime_error {
    int line;
    parse_error(int line_, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

struct ParsedGraph {
    Digraph graph;       // vertices 0-based internally; files are 1-based
    MixedGraph mixed;    // populated alongside (edges empty for pure digraphs)
    bool has_edges = false;
};

// Format: header `p dlchs <n> <m>`, then m lines `a <tail> <head>` (1-based).
// Mixed inputs may use `e <u> <v>` lines; they count toward m. Lines starting
// with `c` are comments.
inline ParsedGraph parse_graph(std::istream& in) {
    ParsedGraph out;
    int line_no = 0;
    int n = -1, m = -1, seen = 0;
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;  // blank line
        if (tag == "c") continue;
        if (tag == "p") {
            if (n != -1) throw parse_error(line_no, "duplicate problem line");
            std::string kind;
            if (!(ls >> kind >> n >> m) || kind != "dlchs" || n < 0 || m < 0)
                throw parse_error(line_no, "expected `p dlchs <n> <m>`");
            out.graph = Digraph(n);
            out.mixed.n = n;
            continue;
        }
        if (n == -1) throw parse_error(line_no, "arc before problem line");
        int u, v;
        if (!(ls >> u >> v)) throw parse_error(line_no, "expected two endpoints");
        if (u < 1 || u > n || v < 1 || v > n) throw parse_error(line_no, "endpoint out of range");
        if (u == v) throw parse_error(line_no, "self-loops are not allowed");
        if (tag == "a") {
            out.graph.add_arc(u - 1, v - 1);
            out.mixed.arcs.push_back({u - 1, v - 1});
        } else if (tag == "e") {
            out.has_edges = true;
            out.mixed.edges.push_back({u - 1, v - 1});
        } else {
            throw parse_error(line_no, "unknown line tag `" + tag + "`");
        }
        ++seen;
    }
    if (n == -1) throw parse_error(line_no == 0 ? 1 : line_no, "missing problem line");
    if (seen != m) throw parse_error(line_no, "expected " + std::to_string(m) + " arc/edge lines, got " +
                                                  std::to_string(seen));
    return out;
}

inline ParsedGraph parse_graph(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

inline void write_graph(std::ostream& os, const Digraph& g) {
    std::vector<Arc> live = g.arcs();
    os << "p dlchs " << g.vertex_count() << " " << live.size() << "\n";
    for (const Arc& a : live) os << "a " << a.tail + 1 << " " << a.head + 1 << "\n";
}

inline std::string write_graph(const Digraph& g) {
    std::ostringstream os;
    write_graph(os, g);
    return os.str();
}

}  // namespace dlchs
