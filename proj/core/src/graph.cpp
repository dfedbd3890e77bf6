#include "clawchrome/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace clawchrome {

Graph::Graph(int n) : n_(n), adj_(n, Bits(n)) {
    if (n < 0) throw std::invalid_argument("graph: negative vertex count");
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw std::invalid_argument("graph: vertex id " + std::to_string(v) + " out of range [0," +
                                    std::to_string(n_) + ")");
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("graph: self-loop not allowed in simple graph");
    if (!adj_[u].test(v)) {
        adj_[u].set(v);
        adj_[v].set(u);
        ++m_;
    }
}

void Graph::remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (adj_[u].test(v)) {
        adj_[u].reset(v);
        adj_[v].reset(u);
        --m_;
    }
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        adj_[u].for_each([&](int v) {
            if (u < v) out.emplace_back(u, v);
        });
    return out;
}

Graph Graph::complement() const {
    Graph c(n_);
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (!adj_[u].test(v)) c.add_edge(u, v);
    return c;
}

Graph Graph::induced(const std::vector<int>& verts) const {
    Graph h((int)verts.size());
    for (size_t i = 0; i < verts.size(); ++i) {
        check_vertex(verts[i]);
        for (size_t j = i + 1; j < verts.size(); ++j)
            if (adj_[verts[i]].test(verts[j])) h.add_edge((int)i, (int)j);
    }
    return h;
}

bool Graph::is_connected() const {
    if (n_ <= 1) return true;
    return components().size() == 1;
}

std::vector<std::vector<int>> Graph::components(const Bits& alive) const {
    std::vector<std::vector<int>> comps;
    Bits seen(n_);
    for (int s = alive.next(0); s >= 0; s = alive.next(s + 1)) {
        if (seen.test(s)) continue;
        std::vector<int> comp, stack{s};
        seen.set(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            Bits nb = adj_[v] & alive;
            nb.for_each([&](int w) {
                if (!seen.test(w)) {
                    seen.set(w);
                    stack.push_back(w);
                }
            });
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    std::sort(comps.begin(), comps.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return comps;
}

std::vector<std::vector<int>> Graph::components() const { return components(full_set(n_)); }

Bits full_set(int n) {
    Bits b(n);
    for (int i = 0; i < n; ++i) b.set(i);
    return b;
}

bool is_clique(const Graph& g, const std::vector<int>& verts) {
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = i + 1; j < verts.size(); ++j)
            if (!g.has_edge(verts[i], verts[j])) return false;
    return true;
}

bool is_independent_set(const Graph& g, const std::vector<int>& verts) {
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = i + 1; j < verts.size(); ++j)
            if (g.has_edge(verts[i], verts[j])) return false;
    return true;
}

}  // namespace clawchrome
