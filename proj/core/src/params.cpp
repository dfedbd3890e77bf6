#include "clawchrome/params.hpp"

#include <algorithm>
#include <stdexcept>

namespace clawchrome {

int codegree(const Graph& g, int u, int v) {
    g.check_vertex(u);
    g.check_vertex(v);
    if (u == v) throw std::invalid_argument("codegree: vertices must be distinct");
    return g.neighbors(u).count_and(g.neighbors(v));
}

int delta2(const Graph& g) {
    if (g.n() < 2) throw std::invalid_argument("delta2: need at least two vertices");
    int best = 0;
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            best = std::max(best, g.neighbors(u).count_and(g.neighbors(v)));
    return best;
}

int delta_e(const Graph& g) {
    int best = 0;
    for (int u = 0; u < g.n(); ++u)
        g.neighbors(u).for_each([&](int v) {
            if (u < v) best = std::max(best, g.neighbors(u).count_and(g.neighbors(v)));
        });
    return best;
}

int anticodegree(const Graph& g, int u, int v) {
    g.check_vertex(u);
    g.check_vertex(v);
    if (u == v) throw std::invalid_argument("anticodegree: vertices must be distinct");
    Bits covered = g.neighbors(u) | g.neighbors(v);
    covered.set(u);
    covered.set(v);
    return g.n() - covered.count();
}

int max_anticodegree(const Graph& g) {
    if (g.n() < 2) throw std::invalid_argument("max_anticodegree: need at least two vertices");
    int best = 0;
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v) best = std::max(best, anticodegree(g, u, v));
    return best;
}

}  // namespace clawchrome
