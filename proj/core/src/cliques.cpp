#include "clawchrome/cliques.hpp"

#include <algorithm>

namespace clawchrome {
namespace {

// Tomita-style max clique: branch on candidates in reverse greedy-coloring
// order, prune with |R| + color bound.
struct CliqueSearch {
    const Graph& g;
    std::vector<int> best;
    std::vector<int> current;
    uint64_t nodes = 0;
    const ProgressFn& progress;

    CliqueSearch(const Graph& g_, const ProgressFn& p) : g(g_), progress(p) {}

    void expand(Bits cand) {
        if (++nodes % (1u << 22) == 0 && progress) progress(nodes);

        std::vector<int> order;
        std::vector<int> bound;
        Bits uncolored = cand;
        int color = 0;
        while (uncolored.any()) {
            ++color;
            Bits avail = uncolored;
            while (true) {
                int v = avail.next(0);
                if (v < 0) break;
                order.push_back(v);
                bound.push_back(color);
                uncolored.reset(v);
                avail.reset(v);
                avail = avail.minus(g.neighbors(v));
            }
        }

        for (int i = (int)order.size() - 1; i >= 0; --i) {
            int v = order[i];
            if ((int)current.size() + bound[i] <= (int)best.size()) return;
            current.push_back(v);
            Bits next = cand & g.neighbors(v);
            if (next.none()) {
                if (current.size() > best.size()) best = current;
            } else {
                expand(next);
            }
            current.pop_back();
            cand.reset(v);
        }
    }
};

std::vector<int> greedy_clique(const Graph& g) {
    // seed: repeatedly add the highest-degree compatible vertex
    std::vector<int> verts(g.n());
    for (int i = 0; i < g.n(); ++i) verts[i] = i;
    std::sort(verts.begin(), verts.end(), [&](int a, int b) {
        int da = g.degree(a), db = g.degree(b);
        return da != db ? da > db : a < b;
    });
    std::vector<int> clique;
    Bits compat = full_set(g.n());
    for (int v : verts)
        if (compat.test(v)) {
            clique.push_back(v);
            compat &= g.neighbors(v);
        }
    return clique;
}

}  // namespace

std::vector<int> maximum_clique(const Graph& g, const ProgressFn& progress) {
    if (g.n() == 0) return {};
    CliqueSearch s(g, progress);
    s.best = greedy_clique(g);
    s.expand(full_set(g.n()));
    std::sort(s.best.begin(), s.best.end());
    return s.best;
}

int clique_number(const Graph& g, const ProgressFn& progress) {
    return (int)maximum_clique(g, progress).size();
}

int independence_number(const Graph& g, const ProgressFn& progress) {
    return clique_number(g.complement(), progress);
}

}  // namespace clawchrome
