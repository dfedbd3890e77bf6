#include "clawchrome/matching.hpp"

#include <algorithm>
#include <queue>

namespace clawchrome {
namespace {

// Blossom contraction bookkeeping for one augmenting-path search.
struct BlossomSearch {
    const Graph& g;
    int n;
    std::vector<int>& match;
    std::vector<int> parent, base;
    std::vector<bool> used, in_blossom;

    BlossomSearch(const Graph& g_, std::vector<int>& match_)
        : g(g_), n(g_.n()), match(match_), parent(n), base(n), used(n), in_blossom(n) {}

    int lowest_common_base(int a, int b) {
        std::vector<bool> seen(n, false);
        while (true) {
            a = base[a];
            seen[a] = true;
            if (match[a] == -1) break;
            a = parent[match[a]];
        }
        while (true) {
            b = base[b];
            if (seen[b]) return b;
            b = parent[match[b]];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base[v] != b) {
            in_blossom[base[v]] = true;
            in_blossom[base[match[v]]] = true;
            parent[v] = child;
            child = match[v];
            v = parent[match[v]];
        }
    }

    // returns an exposed vertex reachable from root by an alternating path,
    // with parent[] encoding the path; -1 if none
    int find_augmenting_path(int root) {
        std::fill(used.begin(), used.end(), false);
        std::fill(parent.begin(), parent.end(), -1);
        for (int i = 0; i < n; ++i) base[i] = i;
        used[root] = true;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int to = g.neighbors(v).next(0); to >= 0; to = g.neighbors(v).next(to + 1)) {
                if (base[v] == base[to] || match[v] == to) continue;
                if (to == root || (match[to] != -1 && parent[match[to]] != -1)) {
                    // odd cycle found: contract the blossom
                    int b = lowest_common_base(v, to);
                    std::fill(in_blossom.begin(), in_blossom.end(), false);
                    mark_path(v, b, to);
                    mark_path(to, b, v);
                    for (int i = 0; i < n; ++i)
                        if (in_blossom[base[i]]) {
                            base[i] = b;
                            if (!used[i]) {
                                used[i] = true;
                                q.push(i);
                            }
                        }
                } else if (parent[to] == -1) {
                    parent[to] = v;
                    if (match[to] == -1) return to;
                    used[match[to]] = true;
                    q.push(match[to]);
                }
            }
        }
        return -1;
    }
};

}  // namespace

Matching maximum_matching(const Graph& g) {
    int n = g.n();
    std::vector<int> match(n, -1);

    // cheap greedy start
    for (int u = 0; u < n; ++u) {
        if (match[u] != -1) continue;
        for (int v = g.neighbors(u).next(0); v >= 0; v = g.neighbors(u).next(v + 1))
            if (match[v] == -1) {
                match[u] = v;
                match[v] = u;
                break;
            }
    }

    BlossomSearch search(g, match);
    for (int v = 0; v < n; ++v) {
        if (match[v] != -1) continue;
        int u = search.find_augmenting_path(v);
        if (u == -1) continue;
        // flip the alternating path back to the root
        while (u != -1) {
            int pv = search.parent[u];
            int ppv = match[pv];
            match[u] = pv;
            match[pv] = u;
            u = ppv;
        }
    }

    Matching m;
    for (int v = 0; v < n; ++v)
        if (match[v] > v) m.edges.emplace_back(v, match[v]);
    return m;
}

}  // namespace clawchrome
