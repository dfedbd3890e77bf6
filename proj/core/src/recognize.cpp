#include "clawchrome/recognize.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace clawchrome {

std::optional<ClassWitness> find_claw(const Graph& g) {
    // triad scan inside each neighborhood
    for (int v = 0; v < g.n(); ++v) {
        auto nb = g.neighbors(v).to_vector();
        for (size_t i = 0; i < nb.size(); ++i)
            for (size_t j = i + 1; j < nb.size(); ++j) {
                if (g.has_edge(nb[i], nb[j])) continue;
                Bits third = g.neighbors(v).minus(g.neighbors(nb[i])).minus(g.neighbors(nb[j]));
                third.reset(nb[i]);
                third.reset(nb[j]);
                int w = third.next(0);
                if (w >= 0) return ClassWitness{"claw", {v, nb[i], nb[j], w}};
            }
    }
    return std::nullopt;
}

std::optional<ClassWitness> find_triad(const Graph& g) {
    // lexicographically least triad
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v) {
            if (g.has_edge(u, v)) continue;
            Bits rest = (~(g.neighbors(u) | g.neighbors(v)));
            rest.reset(u);
            rest.reset(v);
            int w = rest.next(v + 1);
            if (w >= 0) return ClassWitness{"triad", {u, v, w}};
        }
    return std::nullopt;
}

std::optional<ClassWitness> find_triangle(const Graph& g) {
    for (int u = 0; u < g.n(); ++u)
        for (int v = g.neighbors(u).next(u + 1); v >= 0; v = g.neighbors(u).next(v + 1)) {
            Bits common = g.neighbors(u) & g.neighbors(v);
            int w = common.next(v + 1);
            if (w >= 0) return ClassWitness{"triangle", {u, v, w}};
        }
    return std::nullopt;
}

bool is_triangle_free(const Graph& g) { return !find_triangle(g).has_value(); }

QuasiLineCheck is_quasi_line(const Graph& g) {
    for (int v = 0; v < g.n(); ++v) {
        auto nb = g.neighbors(v).to_vector();
        int k = (int)nb.size();
        // 2-color the complement of G[N(v)]; an odd cycle there means N(v)
        // is not the union of two cliques
        std::vector<int> side(k, -1), parent(k, -1);
        for (int s = 0; s < k; ++s) {
            if (side[s] != -1) continue;
            side[s] = 0;
            std::deque<int> q{s};
            while (!q.empty()) {
                int a = q.front();
                q.pop_front();
                for (int b = 0; b < k; ++b) {
                    if (a == b || g.has_edge(nb[a], nb[b])) continue;  // complement edge a-b
                    if (side[b] == -1) {
                        side[b] = 1 - side[a];
                        parent[b] = a;
                        q.push_back(b);
                    } else if (side[b] == side[a]) {
                        // walk both parent chains up to a common ancestor
                        std::vector<int> pa, pb;
                        for (int x = a; x != -1; x = parent[x]) pa.push_back(x);
                        for (int x = b; x != -1; x = parent[x]) pb.push_back(x);
                        while (pa.size() >= 2 && pb.size() >= 2 &&
                               pa[pa.size() - 2] == pb[pb.size() - 2]) {
                            pa.pop_back();
                            pb.pop_back();
                        }
                        std::vector<int> cyc;
                        for (int x : pa) cyc.push_back(nb[x]);
                        for (int i = (int)pb.size() - 2; i >= 0; --i) cyc.push_back(nb[pb[i]]);
                        return {false, v, cyc};
                    }
                }
            }
        }
    }
    return {};
}

PrismaticCheck is_prismatic(const Graph& g) {
    for (int u = 0; u < g.n(); ++u)
        for (int v = g.neighbors(u).next(u + 1); v >= 0; v = g.neighbors(u).next(v + 1)) {
            Bits common = g.neighbors(u) & g.neighbors(v);
            for (int w = common.next(v + 1); w >= 0; w = common.next(w + 1)) {
                for (int x = 0; x < g.n(); ++x) {
                    if (x == u || x == v || x == w) continue;
                    int cnt = (int)g.has_edge(x, u) + g.has_edge(x, v) + g.has_edge(x, w);
                    if (cnt != 1) return {false, {u, v, w}, x, cnt};
                }
            }
        }
    return {};
}

bool is_antiprismatic(const Graph& g) {
    if (find_claw(g)) return false;
    // 2K_1 + K_2: an edge plus a non-adjacent pair avoiding both endpoints
    for (auto [u, v] : g.edges()) {
        Bits away = ~(g.neighbors(u) | g.neighbors(v));
        away.reset(u);
        away.reset(v);
        auto rest = away.to_vector();
        for (size_t i = 0; i < rest.size(); ++i)
            for (size_t j = i + 1; j < rest.size(); ++j)
                if (!g.has_edge(rest[i], rest[j])) return false;
    }
    // 4K_1: independent set of size 4
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v) {
            if (g.has_edge(u, v)) continue;
            Bits rest = ~(g.neighbors(u) | g.neighbors(v));
            rest.reset(u);
            rest.reset(v);
            for (int w = rest.next(v + 1); w >= 0; w = rest.next(w + 1)) {
                Bits fourth = rest.minus(g.neighbors(w));
                if (fourth.next(w + 1) >= 0) return false;
            }
        }
    return true;
}

namespace {

uint64_t bits_to_mask(const Bits& b) {
    uint64_t m = 0;
    b.for_each([&](int v) { m |= uint64_t(1) << v; });
    return m;
}

Bits closed_neighborhood(const Graph& g, int v) {
    Bits b = g.neighbors(v);
    b.set(v);
    return b;
}

}  // namespace

CliqueCutsetResult find_clique_cutset(const Graph& g) {
    if (!g.is_connected())
        throw std::invalid_argument("find_clique_cutset: input must be connected");
    if (g.n() > 64) return {CliqueCutsetResult::Status::not_attempted, {}};
    if (g.n() <= 2) return {CliqueCutsetResult::Status::none, {}};

    constexpr size_t kSeparatorCap = 200000;
    const Bits all = full_set(g.n());

    std::set<uint64_t> seen;
    std::deque<Bits> queue;

    auto offer = [&](const Bits& sep) {
        if (sep.none()) return;
        uint64_t key = bits_to_mask(sep);
        if (seen.insert(key).second) queue.push_back(sep);
    };

    // close separators: neighborhoods of components of G \ N[v]
    for (int v = 0; v < g.n(); ++v) {
        Bits outside = all.minus(closed_neighborhood(g, v));
        for (const auto& comp : g.components(outside)) {
            Bits nb(g.n());
            for (int c : comp) nb |= g.neighbors(c);
            for (int c : comp) nb.reset(c);
            offer(nb);
        }
    }

    while (!queue.empty()) {
        if (seen.size() > kSeparatorCap)
            return {CliqueCutsetResult::Status::not_attempted, {}};
        Bits sep = queue.front();
        queue.pop_front();

        auto verts = sep.to_vector();
        if (is_clique(g, verts)) {
            Bits rest = all.minus(sep);
            if (g.components(rest).size() >= 2)
                return {CliqueCutsetResult::Status::found, verts};
        }

        // expansion step: substitute N(x) for x and take component
        // neighborhoods again
        for (int x : verts) {
            Bits blocked = sep | g.neighbors(x);
            blocked.set(x);
            Bits outside = all.minus(blocked);
            for (const auto& comp : g.components(outside)) {
                Bits nb(g.n());
                for (int c : comp) nb |= g.neighbors(c);
                for (int c : comp) nb.reset(c);
                offer(nb);
            }
        }
    }
    return {CliqueCutsetResult::Status::none, {}};
}

bool contains_w5_subgraph(const Graph& g) {
    for (int w = 0; w < g.n(); ++w) {
        auto nb = g.neighbors(w).to_vector();
        int k = (int)nb.size();
        if (k < 5) continue;
        std::vector<int> path;
        std::vector<bool> used(k, false);
        auto dfs = [&](auto&& self, int depth) -> bool {
            if (depth == 5) return g.has_edge(nb[path[4]], nb[path[0]]);
            for (int i = 0; i < k; ++i) {
                if (used[i]) continue;
                if (depth > 0 && !g.has_edge(nb[path[depth - 1]], nb[i])) continue;
                used[i] = true;
                path.push_back(i);
                if (self(self, depth + 1)) return true;
                path.pop_back();
                used[i] = false;
            }
            return false;
        };
        if (dfs(dfs, 0)) return true;
    }
    return false;
}

std::optional<std::pair<int, int>> find_dominated_pair(const Graph& g, bool require_adjacent) {
    for (int x = 0; x < g.n(); ++x)
        for (int y = 0; y < g.n(); ++y) {
            if (x == y) continue;
            if (require_adjacent && !g.has_edge(x, y)) continue;
            Bits ny = g.neighbors(y);
            ny.reset(x);
            if (ny.is_subset_of(g.neighbors(x))) return std::make_pair(x, y);
        }
    return std::nullopt;
}

bool witness_validates(const Graph& g, const ClassWitness& w) {
    const auto& vs = w.vertices;
    for (int v : vs)
        if (v < 0 || v >= g.n()) return false;
    if (w.kind == "claw") {
        if (vs.size() != 4) return false;
        return g.has_edge(vs[0], vs[1]) && g.has_edge(vs[0], vs[2]) && g.has_edge(vs[0], vs[3]) &&
               !g.has_edge(vs[1], vs[2]) && !g.has_edge(vs[1], vs[3]) && !g.has_edge(vs[2], vs[3]);
    }
    if (w.kind == "triad")
        return vs.size() == 3 && is_independent_set(g, vs) &&
               std::set<int>(vs.begin(), vs.end()).size() == 3;
    if (w.kind == "triangle") return vs.size() == 3 && is_clique(g, vs);
    if (w.kind == "clique-cutset") {
        if (!is_clique(g, vs)) return false;
        Bits rest = full_set(g.n());
        for (int v : vs) rest.reset(v);
        return g.components(rest).size() >= 2;
    }
    if (w.kind == "dominated-pair") {
        if (vs.size() != 2 || vs[0] == vs[1]) return false;
        Bits ny = g.neighbors(vs[1]);
        ny.reset(vs[0]);
        return ny.is_subset_of(g.neighbors(vs[0]));
    }
    if (w.kind == "mixed-vertex") {
        // vertex followed by an odd cycle in the complement of its neighborhood
        if (vs.size() < 4 || vs.size() % 2 != 0) return false;
        int v = vs[0];
        int k = (int)vs.size() - 1;
        for (int i = 1; i <= k; ++i) {
            if (!g.has_edge(v, vs[i])) return false;
            int next = (i % k) + 1;
            if (g.has_edge(vs[i], vs[next])) return false;  // cycle edges live in the complement
        }
        return true;
    }
    return false;
}

}  // namespace clawchrome
