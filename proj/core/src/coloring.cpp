#include "clawchrome/coloring.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace clawchrome {

bool Coloring::total() const {
    return std::all_of(color.begin(), color.end(), [](int c) { return c >= 0; });
}

int Coloring::count_colors() const {
    std::set<int> used;
    for (int c : color)
        if (c >= 0) used.insert(c);
    return (int)used.size();
}

int Coloring::max_color() const {
    int m = -1;
    for (int c : color) m = std::max(m, c);
    return m;
}

ProperCheck is_proper(const Graph& g, const Coloring& c) {
    if (c.n() != g.n()) throw std::invalid_argument("is_proper: coloring size mismatch");
    if (!c.total()) throw std::invalid_argument("is_proper: coloring is partial");
    for (auto [u, v] : g.edges())
        if (c.color[u] == c.color[v]) return {false, u, v};
    return {};
}

bool CliqueCover::validates_on(const Graph& g) const {
    std::vector<int> owner(g.n(), -1);
    for (size_t p = 0; p < parts.size(); ++p) {
        if (parts[p].empty()) return false;
        for (int v : parts[p]) {
            if (v < 0 || v >= g.n() || owner[v] != -1) return false;
            owner[v] = (int)p;
        }
        if (!is_clique(g, parts[p])) return false;
    }
    return std::all_of(owner.begin(), owner.end(), [](int o) { return o >= 0; });
}

Coloring cover_to_coloring(const Graph& g, const CliqueCover& cover) {
    // parts are cliques of the complement, i.e. independent sets of g
    std::vector<int> owner(g.n(), -1);
    for (size_t p = 0; p < cover.parts.size(); ++p) {
        if (cover.parts[p].empty())
            throw std::invalid_argument("cover_to_coloring: empty part");
        for (int v : cover.parts[p]) {
            if (v < 0 || v >= g.n() || owner[v] != -1)
                throw std::invalid_argument("cover_to_coloring: parts do not partition V");
            owner[v] = (int)p;
        }
        if (!is_independent_set(g, cover.parts[p]))
            throw std::invalid_argument(
                "cover_to_coloring: part is not a clique of the complement");
    }
    for (int v = 0; v < g.n(); ++v)
        if (owner[v] == -1) throw std::invalid_argument("cover_to_coloring: uncovered vertex");
    Coloring c(g.n());
    c.color = owner;
    return c;
}

bool Matching::validates_on(const Graph& g) const {
    std::vector<bool> used(g.n(), false);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= g.n() || v < 0 || v >= g.n() || u == v) return false;
        if (!g.has_edge(u, v)) return false;
        if (used[u] || used[v]) return false;
        used[u] = used[v] = true;
    }
    return true;
}

int ListAssignment::min_list_size() const {
    int m = lists.empty() ? 0 : (int)lists[0].size();
    for (const auto& l : lists) m = std::min(m, (int)l.size());
    return m;
}

ListAssignment ListAssignment::uniform(int n, int k) {
    ListAssignment a;
    a.lists.assign(n, {});
    for (auto& l : a.lists) {
        l.resize(k);
        for (int i = 0; i < k; ++i) l[i] = i;
    }
    return a;
}

}  // namespace clawchrome
