#include "clawchrome/generators.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "clawchrome/errors.hpp"
#include "clawchrome/params.hpp"
#include "clawchrome/recognize.hpp"

namespace clawchrome {

uint64_t Rng::next() {
    // splitmix64; fixed algorithm keeps seeded campaigns bit-reproducible
    state_ += 0x9E3779B97f4A7C15ull;
    uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

int Rng::uniform(int lo, int hi) {
    if (lo > hi) throw std::invalid_argument("Rng::uniform: empty range");
    return lo + (int)(next() % (uint64_t)(hi - lo + 1));
}

double Rng::unit() { return (next() >> 11) * (1.0 / 9007199254740992.0); }

Graph empty_graph(int n) { return Graph(n); }

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph cycle_graph(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        if (n >= 3 || i + 1 < n) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph path_graph(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph complete_bipartite(int a, int b) {
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v) g.add_edge(u, v);
    return g;
}

Graph star_graph(int leaves) { return complete_bipartite(1, leaves); }

Graph petersen() {
    // outer cycle 0..4, inner pentagram 5..9, spokes i - i+5
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
        g.add_edge(i, 5 + i);
    }
    return g;
}

Graph icosahedron() {
    // labeling frozen together with the four-coloring below
    static const int E[30][2] = {{0, 2},  {0, 1},  {0, 4},  {0, 3},  {0, 8},  {1, 2},
                                 {1, 6},  {1, 4},  {1, 5},  {2, 8},  {2, 6},  {2, 7},
                                 {3, 9},  {3, 4},  {3, 8},  {3, 11}, {4, 9},  {4, 5},
                                 {5, 9},  {5, 10}, {5, 6},  {6, 7},  {6, 10}, {7, 10},
                                 {7, 11}, {7, 8},  {8, 11}, {9, 11}, {9, 10}, {10, 11}};
    Graph g(12);
    for (auto& e : E) g.add_edge(e[0], e[1]);
    return g;
}

Coloring icosahedron_four_coloring() {
    Coloring c(12);
    c.color = {0, 1, 2, 3, 2, 3, 0, 3, 1, 1, 2, 0};
    return c;
}

Graph w5() {
    Graph g(6);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, 5);
    }
    return g;
}

LineGraphResult line_graph(const Multigraph& h) {
    int m = (int)h.edges.size();
    Graph g(m);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            auto [a, b] = h.edges[i];
            auto [c, d] = h.edges[j];
            if (a == c || a == d || b == c || b == d) g.add_edge(i, j);
        }
    return {g, h.edges};
}

ThickenResult thicken(const ThickeningSpec& spec) {
    const Graph& base = spec.base;
    if ((int)spec.sizes.size() != base.n())
        throw std::invalid_argument("thicken: sizes must cover every base vertex");
    for (int s : spec.sizes)
        if (s < 1) throw std::invalid_argument("thicken: clique sizes must be positive");
    if (!spec.m.validates_on(base)) throw std::invalid_argument("thicken: m is not a matching");

    std::set<std::pair<int, int>> matched;
    for (auto [u, v] : spec.m.edges) matched.insert({std::min(u, v), std::max(u, v)});
    for (const auto& [e, pairs] : spec.removals) {
        (void)pairs;
        if (!matched.count(e))
            throw std::invalid_argument("thicken: removal set on an unmatched edge");
    }

    std::vector<std::vector<int>> blob(base.n());
    int total = 0;
    for (int v = 0; v < base.n(); ++v)
        for (int i = 0; i < spec.sizes[v]; ++i) blob[v].push_back(total++);

    Graph g(total);
    for (int v = 0; v < base.n(); ++v)
        for (size_t i = 0; i < blob[v].size(); ++i)
            for (size_t j = i + 1; j < blob[v].size(); ++j) g.add_edge(blob[v][i], blob[v][j]);
    for (auto [u, v] : base.edges())
        for (int x : blob[u])
            for (int y : blob[v]) g.add_edge(x, y);

    for (auto e : matched) {
        auto it = spec.removals.find(e);
        if (it == spec.removals.end())
            throw std::invalid_argument("thicken: matched edge needs a removal set");
        const auto& pairs = it->second;
        int full = spec.sizes[e.first] * spec.sizes[e.second];
        std::set<std::pair<int, int>> uniq(pairs.begin(), pairs.end());
        if (uniq.empty() || (int)uniq.size() >= full)
            throw std::invalid_argument("thicken: removal set must be nonempty and proper");
        for (auto [i, j] : uniq) {
            if (i < 0 || i >= spec.sizes[e.first] || j < 0 || j >= spec.sizes[e.second])
                throw std::invalid_argument("thicken: removal pair out of range");
            g.remove_edge(blob[e.first][i], blob[e.second][j]);
        }
    }
    return {g, blob};
}

std::vector<std::pair<int, int>> random_removal_subset(Rng& rng, int a, int b) {
    if (a * b < 2)
        throw std::invalid_argument("random_removal_subset: no nonempty proper subset exists");
    std::vector<std::pair<int, int>> subset;
    while (subset.empty() || (int)subset.size() >= a * b) {
        subset.clear();
        for (int i = 0; i < a; ++i)
            for (int j = 0; j < b; ++j)
                if (rng.next() & 1) subset.push_back({i, j});
    }
    return subset;
}

ComposeResult compose_2join(const Graph& g1, const std::vector<int>& x1,
                            const std::vector<int>& y1, const Graph& strip,
                            const std::vector<int>& x2, const std::vector<int>& y2) {
    if (!is_clique(g1, x1) || !is_clique(g1, y1))
        throw std::invalid_argument("compose_2join: x1/y1 must be cliques of g1");
    if (!is_clique(strip, x2) || !is_clique(strip, y2))
        throw std::invalid_argument("compose_2join: x2/y2 must be cliques of the strip");
    std::set<int> x2s(x2.begin(), x2.end());
    for (int v : y2)
        if (x2s.count(v)) throw std::invalid_argument("compose_2join: x2 and y2 must be disjoint");
    if (x1.empty() || y1.empty() || x2.empty() || y2.empty())
        throw std::invalid_argument("compose_2join: join cliques must be non-empty");

    int n1 = g1.n();
    Graph g(n1 + strip.n());
    for (auto [u, v] : g1.edges()) g.add_edge(u, v);
    for (auto [u, v] : strip.edges()) g.add_edge(u + n1, v + n1);
    for (int u : x1)
        for (int v : x2) g.add_edge(u, v + n1);
    for (int u : y1)
        for (int v : y2) g.add_edge(u, v + n1);

    TwoJoinCert cert;
    for (int v = 0; v < n1; ++v) cert.v1.push_back(v);
    for (int v = 0; v < strip.n(); ++v) cert.v2.push_back(v + n1);
    cert.x1 = x1;
    cert.y1 = y1;
    for (int v : x2) cert.x2.push_back(v + n1);
    for (int v : y2) cert.y2.push_back(v + n1);
    return {g, cert};
}

AntihatRibbon antihat_ribbon(int k, const std::vector<std::string>& x) {
    if (k < 3) throw std::invalid_argument("antihat_ribbon: k must be at least 3");
    // full ribbon: a_i = i, b_i = k+i, c_i = 2k+i
    std::vector<bool> removed(3 * k, false);
    for (const auto& label : x) {
        if (label.size() < 2) throw std::invalid_argument("antihat_ribbon: bad role label");
        int idx = std::stoi(label.substr(1)) - 1;
        if (idx < 0 || idx >= k) throw std::invalid_argument("antihat_ribbon: role index range");
        int off = label[0] == 'a' ? 0 : label[0] == 'b' ? k : label[0] == 'c' ? 2 * k : -1;
        if (off < 0) throw std::invalid_argument("antihat_ribbon: bad role label");
        removed[off + idx] = true;
    }

    std::vector<int> id(3 * k, -1);
    int kept = 0;
    for (int v = 0; v < 3 * k; ++v)
        if (!removed[v]) id[v] = kept++;

    Graph g(kept);
    auto add = [&](int u, int v) {
        if (id[u] >= 0 && id[v] >= 0) g.add_edge(id[u], id[v]);
    };
    for (int grp = 0; grp < 3; ++grp)
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) add(grp * k + i, grp * k + j);
    for (int i = 0; i < k; ++i) {
        add(i, k + i);  // a_i ~ b_i
        for (int j = 0; j < k; ++j)
            if (i != j) {
                add(i, 2 * k + j);      // a_i ~ c_j
                add(k + i, 2 * k + j);  // b_i ~ c_j
            }
    }

    AntihatRibbon r;
    r.graph = g;
    r.a.assign(k, -1);
    r.b.assign(k, -1);
    r.c.assign(k, -1);
    int c_alive = 0;
    for (int i = 0; i < k; ++i) {
        r.a[i] = id[i];
        r.b[i] = id[k + i];
        r.c[i] = id[2 * k + i];
        if (r.c[i] >= 0) ++c_alive;
        if (r.a[i] >= 0) r.a_alive.push_back(r.a[i]);
        if (r.b[i] >= 0) r.b_alive.push_back(r.b[i]);
    }
    if (c_alive < 2)
        throw std::invalid_argument("antihat_ribbon: at least two C vertices must survive");
    if (!contains_w5_subgraph(g))
        throw std::invalid_argument("antihat_ribbon: result contains no W5");
    return r;
}

StrangeRibbon strange_ribbon() {
    // a1=0 a2=1 b1=2 b2=3 b3=4 c1=5 c2=6
    Graph g(7);
    g.add_edge(0, 1);
    g.add_edge(2, 3);
    g.add_edge(2, 4);
    g.add_edge(3, 4);
    g.add_edge(5, 6);
    g.add_edge(0, 2);             // a1 ~ b1
    for (int t : {1, 3, 4}) g.add_edge(5, t);     // c1 ~ a2, b2, b3
    for (int t : {0, 1, 2, 3}) g.add_edge(6, t);  // c2 ~ a1, a2, b1, b2
    StrangeRibbon r;
    r.graph = g;
    r.roles = {{"a1", 0}, {"a2", 1}, {"b1", 2}, {"b2", 3}, {"b3", 4}, {"c1", 5}, {"c2", 6}};
    r.a_clique = {0, 1};
    r.b_clique = {2, 3, 4};
    return r;
}

GearRibbon gear_ribbon(bool drop_v9, bool drop_v10) {
    Graph full(10);  // v_i = i-1
    for (int i = 0; i < 6; ++i) full.add_edge(i, (i + 1) % 6);
    for (int t : {0, 1, 2, 5}) full.add_edge(6, t);
    for (int t : {2, 3, 4, 5, 6}) full.add_edge(7, t);
    for (int t : {0, 2, 3, 5, 6, 7}) full.add_edge(8, t);
    for (int t : {1, 2, 4, 5, 6, 7}) full.add_edge(9, t);

    std::vector<int> keep;
    for (int v = 0; v < 10; ++v) {
        if (v == 8 && drop_v9) continue;
        if (v == 9 && drop_v10) continue;
        keep.push_back(v);
    }
    Graph g = full.induced(keep);

    GearRibbon r;
    r.graph = g;
    for (size_t i = 0; i < keep.size(); ++i)
        r.roles["v" + std::to_string(keep[i] + 1)] = (int)i;
    r.x2 = {r.roles["v1"], r.roles["v2"]};
    r.y2 = {r.roles["v4"], r.roles["v5"]};
    return r;
}

RandomRep random_circular_interval(int n, int arc_count, int max_arc_len, uint64_t seed) {
    if (n <= 0 || arc_count < 0 || max_arc_len <= 0)
        throw std::invalid_argument("random_circular_interval: parameters must be positive");
    Rng rng(seed);
    CircularIntervalRep rep;
    rep.order.resize(n);
    for (int i = 0; i < n; ++i) rep.order[i] = i;
    rng.shuffle(rep.order);
    std::set<std::pair<int, int>> arcs;
    for (int i = 0; i < arc_count; ++i) {
        int lo = rng.uniform(0, n - 1);
        int len = rng.uniform(1, std::min(max_arc_len, n));
        arcs.insert({lo, (lo + len - 1) % n});
    }
    rep.arcs.assign(arcs.begin(), arcs.end());
    return {rep.build_graph(), rep};
}

Graph random_graph(int n, double p, uint64_t seed) {
    Rng rng(seed);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.unit() < p) g.add_edge(u, v);
    return g;
}

Graph random_triangle_free(int n, double p, uint64_t seed) {
    if (p < 0 || p > 1) throw std::invalid_argument("random_triangle_free: p in [0,1]");
    Graph g = random_graph(n, p, seed);
    // peel triangles deterministically: first triangle in lex order loses its
    // lexicographically largest edge
    while (true) {
        auto t = find_triangle(g);
        if (!t) break;
        g.remove_edge(t->vertices[1], t->vertices[2]);
    }
    return g;
}

std::string family_name(ClawFreeFamily f) {
    switch (f) {
        case ClawFreeFamily::line_of_random: return "line-of-random";
        case ClawFreeFamily::circular_interval: return "circular-interval";
        case ClawFreeFamily::thickened_ribbon: return "thickened-ribbon";
        case ClawFreeFamily::complement_trianglefree: return "complement-trianglefree";
    }
    return "?";
}

std::optional<ClawFreeFamily> family_from_name(const std::string& name) {
    for (auto f : {ClawFreeFamily::line_of_random, ClawFreeFamily::circular_interval,
                   ClawFreeFamily::thickened_ribbon, ClawFreeFamily::complement_trianglefree})
        if (family_name(f) == name) return f;
    return std::nullopt;
}

namespace {

Multigraph random_root_multigraph(int target_edges, Rng& rng) {
    // pick a root with exactly target_edges edge slots; sprinkle in loops and
    // parallel copies so the multigraph paths get exercised
    int lo = 3;
    while (lo * (lo - 1) / 2 < target_edges) ++lo;
    int nr = rng.uniform(lo, lo + 4);
    Multigraph h(nr);
    std::set<std::pair<int, int>> used;
    while ((int)h.edges.size() < target_edges) {
        double roll = rng.unit();
        if (roll < 0.08) {
            int v = rng.uniform(0, nr - 1);
            h.add_edge(v, v);  // loop
        } else if (roll < 0.16 && !h.edges.empty()) {
            h.edges.push_back(h.edges[rng.uniform(0, (int)h.edges.size() - 1)]);  // parallel copy
        } else {
            int u = rng.uniform(0, nr - 1), v = rng.uniform(0, nr - 1);
            if (u == v) continue;
            if (u > v) std::swap(u, v);
            if (used.insert({u, v}).second) h.add_edge(u, v);
        }
    }
    return h;
}

ThreeCliquedCert ribbon_three_cliques(const AntihatRibbon& r) {
    ThreeCliquedCert cert;
    for (int v : r.a) if (v >= 0) cert.k1.push_back(v);
    for (int v : r.b) if (v >= 0) cert.k2.push_back(v);
    for (int v : r.c) if (v >= 0) cert.k3.push_back(v);
    return cert;
}

}  // namespace

ClawFreeInstance random_claw_free(int n, ClawFreeFamily family, uint64_t seed) {
    Rng rng(seed);
    ClawFreeInstance out;
    out.family = family;

    switch (family) {
        case ClawFreeFamily::line_of_random: {
            Multigraph root = random_root_multigraph(std::max(1, n), rng);
            out.root = root;
            out.graph = line_graph(root).graph;
            break;
        }
        case ClawFreeFamily::circular_interval: {
            int arcs = rng.uniform(std::max(1, n / 2), 2 * n);
            int maxlen = rng.uniform(2, std::max(2, n / 2));
            auto rr = random_circular_interval(n, arcs, maxlen, rng.next());
            out.graph = rr.graph;
            out.rep = rr.rep;
            break;
        }
        case ClawFreeFamily::thickened_ribbon: {
            int pick = rng.uniform(0, 2);
            Graph base;
            ThreeCliquedCert base_cert;
            if (pick == 0) {
                auto r = antihat_ribbon(rng.uniform(3, 4));
                base = r.graph;
                base_cert = ribbon_three_cliques(r);
            } else if (pick == 1) {
                auto r = strange_ribbon();
                base = r.graph;
                base_cert = {{r.roles["a1"], r.roles["a2"]},
                             {r.roles["b1"], r.roles["b2"], r.roles["b3"]},
                             {r.roles["c1"], r.roles["c2"]}};
            } else {
                auto r = gear_ribbon(rng.uniform(0, 1) == 1, rng.uniform(0, 1) == 1);
                base = r.graph;
                auto role = [&](const char* nm) -> int {
                    auto it = r.roles.find(nm);
                    return it == r.roles.end() ? -1 : it->second;
                };
                for (const char* nm : {"v1", "v2", "v7"})
                    if (role(nm) >= 0) base_cert.k1.push_back(role(nm));
                for (const char* nm : {"v3", "v4", "v9"})
                    if (role(nm) >= 0) base_cert.k2.push_back(role(nm));
                for (const char* nm : {"v5", "v6", "v8", "v10"})
                    if (role(nm) >= 0) base_cert.k3.push_back(role(nm));
            }
            ThickeningSpec spec;
            spec.base = base;
            spec.sizes.assign(base.n(), 1);
            for (int extra = n - base.n(); extra > 0; --extra)
                spec.sizes[rng.uniform(0, base.n() - 1)]++;

            // vertex multiplication only: removals along a matched ribbon edge
            // put a claw through the surviving C vertices, so the claw-free
            // family sticks to empty matchings
            auto tr = thicken(spec);
            out.graph = tr.graph;
            ThreeCliquedCert cert;
            for (int v : base_cert.k1)
                cert.k1.insert(cert.k1.end(), tr.blob[v].begin(), tr.blob[v].end());
            for (int v : base_cert.k2)
                cert.k2.insert(cert.k2.end(), tr.blob[v].begin(), tr.blob[v].end());
            for (int v : base_cert.k3)
                cert.k3.insert(cert.k3.end(), tr.blob[v].begin(), tr.blob[v].end());
            out.three_cliqued = cert;
            break;
        }
        case ClawFreeFamily::complement_trianglefree: {
            double p = 0.2 + 0.6 * rng.unit();
            out.graph = random_triangle_free(n, p, rng.next()).complement();
            break;
        }
    }

    if (find_claw(out.graph))
        throw internal_error("random_claw_free: generator emitted a graph with a claw");
    return out;
}

LinearHost random_linear_host(int n, int x_size, int y_size, uint64_t seed) {
    if (x_size + y_size > n)
        throw std::invalid_argument("random_linear_host: end cliques overlap");
    Rng rng(seed);
    Graph g(n);
    auto add_interval = [&](int lo, int hi) {
        for (int i = lo; i <= hi; ++i)
            for (int j = i + 1; j <= hi; ++j) g.add_edge(i, j);
    };
    add_interval(0, x_size - 1);
    add_interval(n - y_size, n - 1);
    int extra = rng.uniform(n / 2, n + 2);
    for (int t = 0; t < extra; ++t) {
        int lo = rng.uniform(0, n - 1);
        int hi = std::min(n - 1, lo + rng.uniform(1, std::max(1, n / 3)));
        add_interval(lo, hi);
    }

    LinearHost host;
    host.graph = g;
    for (int i = 0; i < x_size; ++i) host.x1.push_back(i);
    for (int i = n - y_size; i < n; ++i) host.y1.push_back(i);

    // left-to-right greedy: colored neighbors of v form the clique of its
    // left neighborhood, so at most omega colors appear
    Coloring c(n);
    for (int v = 0; v < n; ++v) {
        Bits forbidden(n + 1);
        for (int u = 0; u < v; ++u)
            if (g.has_edge(u, v)) forbidden.set(c.color[u]);
        int col = 0;
        while (forbidden.test(col)) ++col;
        c.color[v] = col;
    }
    host.coloring = c;
    return host;
}

ComposedInstance random_composed_two_join(StripKind kind, uint64_t seed) {
    Rng rng(seed);
    int n1 = rng.uniform(4, 10);
    int xs = rng.uniform(1, 2), ys = rng.uniform(1, 2);
    LinearHost host = random_linear_host(n1, xs, ys, rng.next());

    Graph strip;
    std::vector<int> x2, y2;
    TwoJoinCert data_cert;  // only the kind-specific fields are used

    if (kind == StripKind::canonical_interval) {
        // retry until the strip is not a clique and ends are disjoint
        while (true) {
            int n2 = rng.uniform(4, 9);
            int sx = rng.uniform(1, 2), sy = rng.uniform(1, 2);
            if (sx + sy > n2) continue;
            LinearHost s = random_linear_host(n2, sx, sy, rng.next());
            if (s.graph.edge_count() == n2 * (n2 - 1) / 2) continue;
            strip = s.graph;
            x2 = s.x1;
            y2 = s.y1;
            data_cert.order.resize(n2);
            for (int i = 0; i < n2; ++i) data_cert.order[i] = i;
            break;
        }
    } else if (kind == StripKind::antihat) {
        while (true) {
            int k = rng.uniform(3, 5);
            std::vector<std::string> drop;
            for (int i = 1; i <= k; ++i)
                for (char part : {'a', 'b', 'c'})
                    if (rng.unit() < 0.12) drop.push_back(std::string(1, part) + std::to_string(i));
            try {
                auto r = antihat_ribbon(k, drop);
                if (r.a_alive.empty() || r.b_alive.empty()) continue;
                strip = r.graph;
                x2 = r.a_alive;
                y2 = r.b_alive;
                data_cert.a = r.a;
                data_cert.b = r.b;
                data_cert.c = r.c;
                break;
            } catch (const std::invalid_argument&) {
                continue;
            }
        }
    } else if (kind == StripKind::strange) {
        auto r = strange_ribbon();
        strip = r.graph;
        x2 = r.a_clique;
        y2 = r.b_clique;
        data_cert.roles = r.roles;
    } else {
        auto r = gear_ribbon(rng.uniform(0, 1) == 1, rng.uniform(0, 1) == 1);
        strip = r.graph;
        x2 = r.x2;
        y2 = r.y2;
        data_cert.roles = r.roles;
    }

    auto composed = compose_2join(host.graph, host.x1, host.y1, strip, x2, y2);
    composed.cert.kind = kind;
    int off = host.graph.n();
    if (kind == StripKind::canonical_interval) {
        for (int v : data_cert.order) composed.cert.order.push_back(v + off);
    } else if (kind == StripKind::antihat) {
        auto shift = [&](const std::vector<int>& roles) {
            std::vector<int> out;
            for (int v : roles) out.push_back(v < 0 ? -1 : v + off);
            return out;
        };
        composed.cert.a = shift(data_cert.a);
        composed.cert.b = shift(data_cert.b);
        composed.cert.c = shift(data_cert.c);
    } else {
        for (const auto& [nm, v] : data_cert.roles) composed.cert.roles[nm] = v + off;
    }

    ComposedInstance inst;
    inst.graph = composed.graph;
    inst.cert = composed.cert;
    inst.g1_coloring = Coloring(composed.graph.n());
    for (int v = 0; v < host.graph.n(); ++v) inst.g1_coloring.color[v] = host.coloring.color[v];
    return inst;
}

}  // namespace clawchrome
