#include "clawchrome/vizing.hpp"

#include <algorithm>
#include <set>

#include "clawchrome/errors.hpp"

namespace clawchrome {

int EdgeColoring::colors_used() const {
    std::set<int> used(color.begin(), color.end());
    used.erase(-1);
    return (int)used.size();
}

bool EdgeColoring::proper_on(const Graph& g) const {
    std::vector<std::vector<int>> seen(g.n());
    for (size_t e = 0; e < edges.size(); ++e) {
        if (color[e] < 0) return false;
        for (int v : {edges[e].first, edges[e].second}) {
            auto& s = seen[v];
            if (std::find(s.begin(), s.end(), color[e]) != s.end()) return false;
            s.push_back(color[e]);
        }
    }
    return true;
}

namespace {

// Misra & Gries working state. at[v][c] is the edge of color c at v, -1 when
// the color is free there.
struct EdgeColorer {
    const Graph& g;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> col;
    std::vector<std::vector<int>> at;
    std::vector<std::vector<int>> inc;  // incident edge ids per vertex
    int palette;

    explicit EdgeColorer(const Graph& g_) : g(g_), edges(g_.edges()) {
        col.assign(edges.size(), -1);
        palette = g.max_degree() + 1;
        at.assign(g.n(), std::vector<int>(std::max(palette, 1), -1));
        inc.assign(g.n(), {});
        for (size_t e = 0; e < edges.size(); ++e) {
            inc[edges[e].first].push_back((int)e);
            inc[edges[e].second].push_back((int)e);
        }
    }

    int other(int e, int v) const { return edges[e].first == v ? edges[e].second : edges[e].first; }

    bool is_free(int v, int c) const { return at[v][c] == -1; }

    int free_color(int v) const {
        for (int c = 0; c < palette; ++c)
            if (is_free(v, c)) return c;
        throw internal_error("vizing: no free color in a Δ+1 palette");
    }

    void set_color(int e, int c) {
        int old = col[e];
        for (int v : {edges[e].first, edges[e].second}) {
            if (old >= 0 && at[v][old] == e) at[v][old] = -1;
            at[v][c] = e;
        }
        col[e] = c;
    }

    // fan of x starting with y: each next edge is colored, its color free at
    // the previous fan vertex
    std::vector<int> maximal_fan(int x, int y) {
        std::vector<int> fan{y};
        bool extended = true;
        while (extended) {
            extended = false;
            for (int e : inc[x]) {
                if (col[e] < 0) continue;
                int v = other(e, x);
                if (std::find(fan.begin(), fan.end(), v) != fan.end()) continue;
                if (is_free(fan.back(), col[e])) {
                    fan.push_back(v);
                    extended = true;
                }
            }
        }
        return fan;
    }

    // flip colors along the maximal path from x whose edges alternate d, c
    void invert_cd_path(int x, int c, int d) {
        std::vector<int> path;
        std::vector<int> touched{x};
        int cur = x, want = d;
        while (at[cur][want] != -1) {
            int e = at[cur][want];
            path.push_back(e);
            cur = other(e, cur);
            touched.push_back(cur);
            want = (want == d) ? c : d;
        }
        for (int e : path) col[e] = (col[e] == c) ? d : c;
        for (int v : touched) {
            at[v][c] = at[v][d] = -1;
            for (int e : inc[v]) {
                if (col[e] == c) at[v][c] = e;
                if (col[e] == d) at[v][d] = e;
            }
        }
    }

    int edge_id(int x, int v) const {
        for (int e : inc[x])
            if (other(e, x) == v) return e;
        throw internal_error("vizing: fan edge lookup failed");
    }

    void color_one(int x, int y) {
        // take a color free at both ends when one exists; the fan machinery
        // is only needed when the greedy step is blocked
        for (int c = 0; c < palette; ++c)
            if (is_free(x, c) && is_free(y, c)) {
                set_color(edge_id(x, y), c);
                return;
            }
        auto fan = maximal_fan(x, y);
        int c = free_color(x);
        int d = free_color(fan.back());
        invert_cd_path(x, c, d);
        size_t w = 0;
        while (w < fan.size() && !is_free(fan[w], d)) ++w;
        if (w == fan.size()) throw internal_error("vizing: no d-free fan vertex");
        // rotate: every fan edge takes its successor's color
        for (size_t i = 1; i <= w; ++i)
            set_color(edge_id(x, fan[i - 1]), col[edge_id(x, fan[i])]);
        set_color(edge_id(x, fan[w]), d);
    }

    EdgeColoring run() {
        for (size_t e = 0; e < edges.size(); ++e)
            if (col[e] < 0) color_one(edges[e].first, edges[e].second);
        return {edges, col};
    }
};

}  // namespace

EdgeColoring vizing_edge_color(const Graph& h) {
    if (h.edge_count() == 0) return {h.edges(), {}};
    return EdgeColorer(h).run();
}

}  // namespace clawchrome
