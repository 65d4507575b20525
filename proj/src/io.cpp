#include "ctsp/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace ctsp {

namespace {

[[noreturn]] void fail(int line, const std::string& msg) {
    throw ParseError("line " + std::to_string(line) + ": " + msg);
}

Cost parse_cost(const std::string& tok, int line, int scale_digits) {
    std::string s = tok;
    if (!s.empty() && s[0] == '-') fail(line, "negative cost");
    std::string intpart = s, frac;
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        if (scale_digits == 0) fail(line, "decimal cost without --scale");
        intpart = s.substr(0, dot);
        frac = s.substr(dot + 1);
        if ((int)frac.size() > scale_digits)
            fail(line, "cost has more fractional digits than the scale allows");
    }
    if (intpart.empty() && frac.empty()) fail(line, "malformed cost");
    for (char c : intpart + frac)
        if (c < '0' || c > '9') fail(line, "malformed cost");
    while ((int)frac.size() < scale_digits) frac += '0';
    Cost value = 0;
    for (char c : intpart + frac) {
        if (value > kMaxTotalCost / 10) fail(line, "cost too large");
        value = value * 10 + (c - '0');
    }
    return value;
}

}  // namespace

WeightedMultigraph load_graph(const std::string& text, int scale_digits) {
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    long n = -1, m = -1;
    WeightedMultigraph g;
    long edges_seen = 0;
    Cost total = 0;

    while (std::getline(in, raw)) {
        lineno++;
        std::string line = raw;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string kind;
        if (!(ls >> kind)) continue;

        if (kind == "p") {
            if (n >= 0) fail(lineno, "duplicate header");
            if (!(ls >> n >> m) || n <= 0 || m < 0) fail(lineno, "malformed header");
            std::string extra;
            if (ls >> extra) fail(lineno, "malformed header");
            for (long i = 0; i < n; i++) g.add_vertex();
        } else if (kind == "e") {
            if (n < 0) fail(lineno, "edge before header");
            long u, v;
            std::string costtok;
            if (!(ls >> u >> v >> costtok)) fail(lineno, "malformed edge line");
            if (u < 1 || u > n || v < 1 || v > n) fail(lineno, "vertex index out of range");
            Cost c = parse_cost(costtok, lineno, scale_digits);
            if (c > kMaxTotalCost - total) fail(lineno, "total cost exceeds 2^62");
            total += c;
            if (++edges_seen > m) fail(lineno, "more edges than declared");
            g.add_edge(static_cast<VertexId>(u - 1), static_cast<VertexId>(v - 1), c);
        } else {
            fail(lineno, "unknown line kind '" + kind + "'");
        }
    }
    if (n < 0) fail(lineno, "missing header");
    if (edges_seen != m) fail(lineno, "fewer edges than declared");
    long degsum = 0;
    for (VertexId v : g.vertex_ids()) degsum += g.degree(v);
    if (degsum % 2 != 0) fail(lineno, "odd degree sum");
    if (!is_connected(g)) fail(lineno, "disconnected input");
    return g;
}

WeightedMultigraph load_graph_file(const std::string& path, int scale_digits) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return load_graph(ss.str(), scale_digits);
}

std::string save_graph(const WeightedMultigraph& g, const std::string& comment) {
    // compact to 1..n in id order
    auto verts = g.vertex_ids();
    std::ostringstream out;
    if (!comment.empty()) out << "# " << comment << "\n";
    out << "p " << verts.size() << " " << g.num_edges() << "\n";
    auto index = [&](VertexId v) {
        return 1 + (std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
    };
    for (EdgeId id : g.edge_ids()) {
        const Edge& e = g.edge(id);
        out << "e " << index(e.u) << " " << index(e.v) << " " << e.cost << "\n";
    }
    return out.str();
}

void save_graph_file(const WeightedMultigraph& g, const std::string& path,
                     const std::string& comment) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open " + path + " for writing");
    out << save_graph(g, comment);
}

}  // namespace ctsp
