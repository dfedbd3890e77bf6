#include "clawchrome/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace clawchrome {
namespace {

std::runtime_error parse_error(const std::string& what) {
    return std::runtime_error("graph parse error: " + what);
}

}  // namespace

Graph read_edge_list(std::istream& in) {
    int n, m;
    if (!(in >> n >> m)) throw parse_error("expected header 'n m'");
    Graph g(n);
    for (int i = 0; i < m; ++i) {
        int u, v;
        if (!(in >> u >> v)) throw parse_error("truncated edge list");
        g.add_edge(u, v);
    }
    return g;
}

void write_edge_list(std::ostream& out, const Graph& g) {
    auto es = g.edges();
    out << g.n() << ' ' << es.size() << '\n';
    for (auto [u, v] : es) out << u << ' ' << v << '\n';
}

Graph read_dimacs(std::istream& in) {
    std::string line;
    int n = -1, declared_m = 0;
    Graph g;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        char tag;
        ls >> tag;
        if (tag == 'c') continue;
        if (tag == 'p') {
            std::string fmt;
            ls >> fmt >> n >> declared_m;
            if (!ls || n < 0) throw parse_error("bad DIMACS problem line");
            g = Graph(n);
        } else if (tag == 'e') {
            if (n < 0) throw parse_error("DIMACS edge before problem line");
            int u, v;
            if (!(ls >> u >> v)) throw parse_error("bad DIMACS edge line");
            g.add_edge(u - 1, v - 1);
        }
    }
    if (n < 0) throw parse_error("no DIMACS problem line");
    return g;
}

Multigraph read_multigraph(std::istream& in) {
    int n, m;
    if (!(in >> n >> m)) throw parse_error("expected header 'n m'");
    Multigraph h(n);
    for (int i = 0; i < m; ++i) {
        int u, v;
        if (!(in >> u >> v)) throw parse_error("truncated edge list");
        h.add_edge(u, v);
    }
    return h;
}

void write_multigraph(std::ostream& out, const Multigraph& h) {
    out << h.n << ' ' << h.edges.size() << '\n';
    for (auto [u, v] : h.edges) out << u << ' ' << v << '\n';
}

Graph read_graph_auto(std::istream& in) {
    std::stringstream buf;
    buf << in.rdbuf();
    std::string content = buf.str();
    size_t i = content.find_first_not_of(" \t\r\n");
    if (i == std::string::npos) throw parse_error("empty input");
    std::istringstream again(content);
    if (content[i] == 'p' || content[i] == 'c') return read_dimacs(again);
    return read_edge_list(again);
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    return read_graph_auto(in);
}

Multigraph read_multigraph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open multigraph file: " + path);
    return read_multigraph(in);
}

void write_graph_file(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    write_edge_list(out, g);
}

}  // namespace clawchrome
