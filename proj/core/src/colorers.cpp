#include "clawchrome/colorers.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "clawchrome/errors.hpp"
#include "clawchrome/generators.hpp"
#include "clawchrome/matching.hpp"
#include "clawchrome/oracle.hpp"
#include "clawchrome/params.hpp"
#include "clawchrome/recognize.hpp"

namespace clawchrome {
namespace {

void assert_proper(const Graph& g, const Coloring& c, const char* who) {
    auto check = is_proper(g, c);
    if (!check.proper)
        throw internal_error(std::string(who) + ": produced an improper coloring on edge (" +
                             std::to_string(check.u) + "," + std::to_string(check.v) + ")");
}

// smallest color of `list` not used on colored neighbors of v; -1 if stuck
int smallest_listed(const Graph& g, const Coloring& c, int v, const std::vector<int>& list) {
    std::set<int> forbidden;
    for (int u = g.neighbors(v).next(0); u >= 0; u = g.neighbors(v).next(u + 1))
        if (c.color[u] >= 0) forbidden.insert(c.color[u]);
    for (int col : list)
        if (!forbidden.count(col)) return col;
    return -1;
}

std::string join_ids(const std::vector<int>& vs) {
    std::ostringstream os;
    for (size_t i = 0; i < vs.size(); ++i) os << (i ? "," : "") << vs[i];
    return os.str();
}

}  // namespace

LineGraphColoring color_line_graph(const Multigraph& h) {
    auto lg = line_graph(h);
    const Graph& L = lg.graph;
    int m = L.n();

    // first edge of each simple pair is the representative; loops and later
    // parallel copies are appended after the Vizing phase
    Graph simple = h.underlying_simple();
    std::map<std::pair<int, int>, int> rep_of_pair;
    std::vector<int> extras;
    for (int e = 0; e < m; ++e) {
        auto [u, v] = h.edges[e];
        if (u == v || rep_of_pair.count({u, v}))
            extras.push_back(e);
        else
            rep_of_pair[{u, v}] = e;
    }

    Coloring c(m);
    EdgeColoring ec = vizing_edge_color(simple);
    for (size_t i = 0; i < ec.edges.size(); ++i) c.color[rep_of_pair.at(ec.edges[i])] = ec.color[i];

    // greedy appends: a loop vertex sees one star clique, a parallel copy is
    // an adjacent twin of its representative, so degrees stay within
    // delta_e(L)+1 and the palette never grows past delta_e(L)+3
    for (int e : extras) {
        int col = 0;
        std::set<int> forbidden;
        for (int u = L.neighbors(e).next(0); u >= 0; u = L.neighbors(e).next(u + 1))
            if (c.color[u] >= 0) forbidden.insert(c.color[u]);
        while (forbidden.count(col)) ++col;
        c.color[e] = col;
    }

    assert_proper(L, c, "color_line_graph");
    return {L, lg.edge_of_vertex, c};
}

namespace {

void require_rep(const Graph& g, const CircularIntervalRep& rep) {
    if (!rep.matches(g))
        throw invalid_certificate(
            "circular interval representation does not match the graph");
}

void require_lists(const Graph& g, const ListAssignment& lists, int needed, const char* who) {
    if (lists.n() != g.n())
        throw std::invalid_argument(std::string(who) + ": one list per vertex required");
    for (const auto& l : lists.lists)
        if ((int)l.size() < needed)
            throw std::invalid_argument(std::string(who) + ": every list needs at least " +
                                        std::to_string(needed) + " colors");
}

}  // namespace

Coloring color_circular_interval(const Graph& g, const CircularIntervalRep& rep,
                                 const ListAssignment& lists) {
    require_rep(g, rep);
    int n = g.n();
    int needed = n >= 2 ? delta2(g) + 3 : 1;
    require_lists(g, lists, needed, "color_circular_interval");

    int k = rep.longest_arc();
    auto rightmost = rep.rightmost_of_length(k);
    int start = 0;
    for (int p = 0; p < n; ++p)
        if (k == 1 || rightmost[p]) {
            start = p;
            break;
        }

    Coloring c(n);
    for (int step = 0; step < n; ++step) {
        int v = rep.order[(start + step) % n];
        int col = smallest_listed(g, c, v, lists.lists[v]);
        if (col < 0)
            throw internal_error("color_circular_interval: no listed color available at vertex " +
                                 std::to_string(v));
        c.color[v] = col;
    }
    assert_proper(g, c, "color_circular_interval");
    return c;
}

namespace {

// Degree-choosable coloring for the all-rightmost fallback (cliques and
// cycle powers). Lists here satisfy |L(v)| >= deg(v) on every component.
Coloring brooks_style_list_color(const Graph& g, const ListAssignment& lists) {
    int n = g.n();
    Coloring c(n);

    for (const auto& comp : g.components()) {
        // (1) a vertex with slack colors: color it last along a DFS tree
        int savior = -1;
        for (int v : comp)
            if ((int)lists.lists[v].size() > g.degree(v)) {
                savior = v;
                break;
            }

        auto color_tree_rooted = [&](int root) {
            std::vector<int> order{root};
            Bits seen(n);
            seen.set(root);
            for (size_t i = 0; i < order.size(); ++i)
                g.neighbors(order[i]).for_each([&](int w) {
                    if (!seen.test(w) && c.color[w] < 0) {
                        seen.set(w);
                        order.push_back(w);
                    }
                });
            for (auto it = order.rbegin(); it != order.rend(); ++it) {
                int col = smallest_listed(g, c, *it, lists.lists[*it]);
                if (col < 0)
                    throw internal_error("brooks_style_list_color: stuck at vertex " +
                                         std::to_string(*it));
                c.color[*it] = col;
            }
        };

        if (savior >= 0) {
            color_tree_rooted(savior);
            continue;
        }

        // (2) two non-adjacent neighbors of v sharing a listed color, whose
        // removal keeps the component connected: give them the same color,
        // then v sees at most deg(v)-1 distinct colors
        bool done = false;
        Bits comp_bits(n);
        for (int v : comp) comp_bits.set(v);
        for (int v : comp) {
            if (done) break;
            auto nb = g.neighbors(v).to_vector();
            for (size_t i = 0; i < nb.size() && !done; ++i)
                for (size_t j = i + 1; j < nb.size() && !done; ++j) {
                    int x = nb[i], y = nb[j];
                    if (g.has_edge(x, y)) continue;
                    int shared = -1;
                    for (int col : lists.lists[x]) {
                        const auto& ly = lists.lists[y];
                        if (std::find(ly.begin(), ly.end(), col) != ly.end()) {
                            shared = col;
                            break;
                        }
                    }
                    if (shared < 0) continue;
                    Bits rest = comp_bits;
                    rest.reset(x);
                    rest.reset(y);
                    if (g.components(rest).size() != 1) continue;
                    c.color[x] = c.color[y] = shared;
                    color_tree_rooted(v);
                    done = true;
                }
        }
        if (done) continue;

        // (3) adversarial disjoint-ish lists: exact backtracking on the
        // component (small, structured cases only)
        std::vector<int> verts = comp;
        Graph sub = g.induced(verts);
        ListAssignment sublists;
        for (int v : verts) sublists.lists.push_back(lists.lists[v]);
        auto solved = solve_list_coloring(sub, sublists, 200'000'000ull);
        if (solved.status != Feasibility::feasible)
            throw internal_error("brooks_style_list_color: backtracking fallback failed");
        for (size_t i = 0; i < verts.size(); ++i) c.color[verts[i]] = solved.coloring.color[i];
    }
    return c;
}

}  // namespace

TightIntervalResult color_circular_interval_tight(const Graph& g, const CircularIntervalRep& rep,
                                                  const ListAssignment& lists) {
    require_rep(g, rep);
    int n = g.n();
    int needed = n >= 2 ? delta2(g) + 2 : 1;
    require_lists(g, lists, needed, "color_circular_interval_tight");

    int k = rep.longest_arc();
    auto rightmost = rep.rightmost_of_length(k);
    int start = -1;
    if (k > 1)
        for (int p = 0; p < n; ++p)
            if (rightmost[p] && !rightmost[(p + n - 1) % n]) {
                start = p;
                break;
            }

    TightIntervalResult r;
    Coloring c(n);
    if (start < 0) {
        // every vertex is the rightmost vertex of a longest arc: the graph is
        // complete or a power of the cycle; Brooks-style list coloring
        c = brooks_style_list_color(g, lists);
        r.used_fallback = true;
    } else {
        bool swapped = false;
        for (int step = 0; step < n; ++step) {
            int v = rep.order[(start + step) % n];
            int col = smallest_listed(g, c, v, lists.lists[v]);
            if (col >= 0) {
                c.color[v] = col;
                continue;
            }
            // the single stuck vertex: defer its left neighbor, color v
            // first, then re-color the neighbor
            if (step == 0 || swapped)
                throw internal_error("color_circular_interval_tight: unexpected second stuck vertex");
            swapped = true;
            int u = rep.order[(start + step - 1) % n];
            c.color[u] = -1;
            col = smallest_listed(g, c, v, lists.lists[v]);
            if (col < 0)
                throw internal_error("color_circular_interval_tight: stuck even after swap");
            c.color[v] = col;
            int ucol = smallest_listed(g, c, u, lists.lists[u]);
            if (ucol < 0)
                throw internal_error("color_circular_interval_tight: swap partner stuck");
            c.color[u] = ucol;
            r.swap_repaired = true;
        }
    }

    assert_proper(g, c, "color_circular_interval_tight");
    r.coloring = c;
    r.colors_used = c.count_colors();
    r.delta_e_plus_two = delta_e(g) + 2;
    r.exceeds_delta_e_bound = r.colors_used > r.delta_e_plus_two;
    return r;
}

CliqueCover cover_triangle_free(const Graph& h) {
    if (auto t = find_triangle(h))
        throw std::invalid_argument("cover_triangle_free: input has a triangle (" +
                                    join_ids(t->vertices) + ")");
    Matching m = maximum_matching(h);
    CliqueCover cover;
    std::vector<bool> matched(h.n(), false);
    for (auto [u, v] : m.edges) {
        cover.parts.push_back({u, v});
        matched[u] = matched[v] = true;
    }
    for (int v = 0; v < h.n(); ++v)
        if (!matched[v]) cover.parts.push_back({v});
    return cover;
}

Coloring color_alpha2(const Graph& g) {
    if (auto t = find_triad(g))
        throw std::invalid_argument("color_alpha2: triad present (" + join_ids(t->vertices) + ")");
    Graph comp = g.complement();
    CliqueCover cover = cover_triangle_free(comp);
    Coloring c = cover_to_coloring(g, cover);
    assert_proper(g, c, "color_alpha2");
    return c;
}

CliqueCover cover_prismatic(const Graph& h) {
    auto check = is_prismatic(h);
    if (!check.prismatic) {
        std::ostringstream os;
        os << "cover_prismatic: not prismatic; vertex " << check.vertex << " has "
           << check.adjacency_count << " neighbors in triangle (" << check.triangle[0] << ","
           << check.triangle[1] << "," << check.triangle[2] << ")";
        throw std::invalid_argument(os.str());
    }

    // greedy peel: first triangle in lex order, wholesale removal
    Bits alive = full_set(h.n());
    CliqueCover cover;
    while (true) {
        std::array<int, 3> tri{-1, -1, -1};
        for (int u = alive.next(0); u >= 0 && tri[0] < 0; u = alive.next(u + 1)) {
            Bits nu = h.neighbors(u) & alive;
            for (int v = nu.next(u + 1); v >= 0 && tri[0] < 0; v = nu.next(v + 1)) {
                Bits common = nu & h.neighbors(v);
                int w = common.next(v + 1);
                if (w >= 0) tri = {u, v, w};
            }
        }
        if (tri[0] < 0) break;
        cover.parts.push_back({tri[0], tri[1], tri[2]});
        for (int t : tri) alive.reset(t);
    }

    std::vector<int> rest = alive.to_vector();
    Graph sub = h.induced(rest);
    CliqueCover base = cover_triangle_free(sub);
    for (const auto& part : base.parts) {
        std::vector<int> mapped;
        for (int v : part) mapped.push_back(rest[v]);
        cover.parts.push_back(mapped);
    }
    if (!cover.validates_on(h)) throw internal_error("cover_prismatic: cover failed validation");
    return cover;
}

Coloring color_antiprismatic(const Graph& g) {
    Graph comp = g.complement();
    CliqueCover cover;
    try {
        cover = cover_prismatic(comp);
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(std::string("color_antiprismatic: complement check failed: ") +
                                    e.what());
    }
    Coloring c = cover_to_coloring(g, cover);
    assert_proper(g, c, "color_antiprismatic");
    return c;
}

namespace {

struct ThreeCliquedWorker {
    const Graph& g;
    Coloring coloring;

    explicit ThreeCliquedWorker(const Graph& g_) : g(g_), coloring(g_.n()) {}

    // lexicographically least triad among alive vertices
    std::array<int, 3> find_alive_triad(const Bits& alive) const {
        for (int u = alive.next(0); u >= 0; u = alive.next(u + 1))
            for (int v = alive.next(u + 1); v >= 0; v = alive.next(v + 1)) {
                if (g.has_edge(u, v)) continue;
                Bits rest = alive.minus(g.neighbors(u)).minus(g.neighbors(v));
                int w = rest.next(v + 1);
                if (w >= 0) return {u, v, w};
            }
        return {-1, -1, -1};
    }

    int max_within_part_codegree(const Bits& alive,
                                 const std::array<std::vector<int>, 3>& parts) const {
        int best = 0;
        for (const auto& part : parts)
            for (size_t i = 0; i < part.size(); ++i)
                for (size_t j = i + 1; j < part.size(); ++j) {
                    Bits common = g.neighbors(part[i]) & g.neighbors(part[j]) & alive;
                    best = std::max(best, common.count());
                }
        return best;
    }

    // returns the number of colors used on the alive set (colors 0..count-1)
    int color(Bits alive, std::array<std::vector<int>, 3> parts) {
        auto triad = find_alive_triad(alive);
        if (triad[0] < 0) {
            // no triad left: matching cover of the complement
            std::vector<int> verts = alive.to_vector();
            if (verts.empty()) return 0;
            Graph sub = g.induced(verts);
            Coloring base = color_alpha2(sub);
            for (size_t i = 0; i < verts.size(); ++i) coloring.color[verts[i]] = base.color[i];
            return base.count_colors();
        }

        Bits rest = alive;
        for (int t : triad) rest.reset(t);
        auto rest_verts = rest.to_vector();

        bool rest_is_triangle = rest_verts.size() == 3 && g.has_edge(rest_verts[0], rest_verts[1]) &&
                                g.has_edge(rest_verts[0], rest_verts[2]) &&
                                g.has_edge(rest_verts[1], rest_verts[2]);

        if (rest_is_triangle && max_within_part_codegree(alive, parts) == 0) {
            // the tight 6-vertex configuration: parts are the matching pairs
            // a_i b_i; give a_1 b_2, a_2 b_3, a_3 b_1 the three colors
            std::array<int, 3> a{-1, -1, -1}, b{-1, -1, -1};
            for (int p = 0; p < 3; ++p)
                for (int v : parts[p]) {
                    if (!alive.test(v)) continue;
                    bool in_triad = v == triad[0] || v == triad[1] || v == triad[2];
                    (in_triad ? a[p] : b[p]) = v;
                }
            for (int p = 0; p < 3; ++p) {
                if (a[p] < 0 || b[p] < 0)
                    throw internal_error("color_three_cliqued: corner configuration malformed");
                for (int q = 0; q < 3; ++q)
                    if (p != q && g.has_edge(a[p], b[q]))
                        throw internal_error("color_three_cliqued: corner has a cross edge");
            }
            for (int p = 0; p < 3; ++p) {
                coloring.color[a[p]] = p;
                coloring.color[b[(p + 1) % 3]] = p;
            }
            return 3;
        }

        std::array<std::vector<int>, 3> next_parts;
        for (int p = 0; p < 3; ++p)
            for (int v : parts[p])
                if (rest.test(v)) next_parts[p].push_back(v);
        int used = color(rest, next_parts);
        for (int t : triad) coloring.color[t] = used;  // one fresh color
        return used + 1;
    }
};

}  // namespace

Coloring color_three_cliqued(const Graph& g, const ThreeCliquedCert& cert) {
    cert.validate(g);
    if (auto claw = find_claw(g))
        throw std::invalid_argument("color_three_cliqued: claw present (" +
                                    join_ids(claw->vertices) + ")");
    ThreeCliquedWorker worker(g);
    worker.color(full_set(g.n()), {cert.k1, cert.k2, cert.k3});
    assert_proper(g, worker.coloring, "color_three_cliqued");
    return worker.coloring;
}

Coloring color_icosahedral(const Graph& g, const std::vector<int>& embedding) {
    Graph ico = icosahedron();
    if ((int)embedding.size() != g.n())
        throw invalid_certificate("icosahedral embedding: size mismatch");
    std::set<int> used(embedding.begin(), embedding.end());
    if ((int)used.size() != g.n())
        throw invalid_certificate("icosahedral embedding: not injective");
    for (int e : embedding)
        if (e < 0 || e >= 12) throw invalid_certificate("icosahedral embedding: vertex range");
    for (int i = 0; i < g.n(); ++i)
        for (int j = i + 1; j < g.n(); ++j)
            if (g.has_edge(i, j) != ico.has_edge(embedding[i], embedding[j]))
                throw invalid_certificate("icosahedral embedding: adjacency mismatch");

    Coloring c(g.n());
    if (!is_triangle_free(g)) {
        Coloring fig = icosahedron_four_coloring();
        for (int i = 0; i < g.n(); ++i) c.color[i] = fig.color[embedding[i]];
    } else {
        // a surviving degree-3 vertex would keep two consecutive neighbors
        // of its 5-cycle neighborhood, hence a triangle
        for (int v = 0; v < g.n(); ++v) {
            if (g.degree(v) > 2)
                throw internal_error("color_icosahedral: degree bound violated");
            std::set<int> forbidden;
            for (int u = 0; u < v; ++u)
                if (g.has_edge(u, v)) forbidden.insert(c.color[u]);
            int col = 0;
            while (forbidden.count(col)) ++col;
            c.color[v] = col;
        }
    }
    assert_proper(g, c, "color_icosahedral");
    return c;
}

Coloring lift_clique_cutset(const Graph& g, const std::vector<int>& cutset,
                            const std::vector<Coloring>& piece_colorings) {
    if (cutset.empty() || !is_clique(g, cutset))
        throw std::invalid_argument("lift_clique_cutset: cutset must be a non-empty clique");
    Bits rest = full_set(g.n());
    for (int v : cutset) {
        g.check_vertex(v);
        rest.reset(v);
    }
    auto comps = g.components(rest);
    if (comps.size() < 2) throw std::invalid_argument("lift_clique_cutset: set does not cut");
    if (comps.size() != piece_colorings.size())
        throw std::invalid_argument("lift_clique_cutset: need one coloring per piece");

    // normalize piece colorings to dense 0..count-1
    std::vector<std::vector<int>> pieces;
    std::vector<std::map<int, int>> dense(comps.size());
    int palette = 0;
    for (size_t i = 0; i < comps.size(); ++i) {
        std::vector<int> piece = comps[i];
        piece.insert(piece.end(), cutset.begin(), cutset.end());
        std::sort(piece.begin(), piece.end());
        const Coloring& pc = piece_colorings[i];
        if (pc.n() != g.n())
            throw std::invalid_argument("lift_clique_cutset: piece coloring size mismatch");
        std::set<int> cols;
        for (int v : piece) {
            if (pc.color[v] < 0)
                throw std::invalid_argument("lift_clique_cutset: piece coloring not total");
            cols.insert(pc.color[v]);
        }
        for (int v : piece)
            for (int u : piece)
                if (u < v && g.has_edge(u, v) && pc.color[u] == pc.color[v])
                    throw std::invalid_argument("lift_clique_cutset: piece coloring improper");
        int next = 0;
        for (int col : cols) dense[i][col] = next++;
        palette = std::max(palette, next);
        pieces.push_back(piece);
    }

    // permute piece palettes to agree on the cutset: target = piece 0's view
    Coloring out(g.n());
    std::vector<int> target(cutset.size());
    for (size_t s = 0; s < cutset.size(); ++s)
        target[s] = dense[0].at(piece_colorings[0].color[cutset[s]]);

    for (size_t i = 0; i < comps.size(); ++i) {
        std::vector<int> perm(palette, -1);
        std::vector<bool> taken(palette, false);
        for (size_t s = 0; s < cutset.size(); ++s) {
            int from = dense[i].at(piece_colorings[i].color[cutset[s]]);
            perm[from] = target[s];
            taken[target[s]] = true;
        }
        int fill = 0;
        for (int c = 0; c < palette; ++c) {
            if (perm[c] != -1) continue;
            while (taken[fill]) ++fill;
            perm[c] = fill;
            taken[fill] = true;
        }
        for (int v : comps[i]) out.color[v] = perm[dense[i].at(piece_colorings[i].color[v])];
    }
    for (size_t s = 0; s < cutset.size(); ++s) out.color[cutset[s]] = target[s];

    assert_proper(g, out, "lift_clique_cutset");
    return out;
}

Coloring extend_dominated(const Graph& g, int x, int y, const Coloring& coloring_minus_y) {
    g.check_vertex(x);
    g.check_vertex(y);
    if (x == y) throw std::invalid_argument("extend_dominated: x and y must differ");
    Bits ny = g.neighbors(y);
    ny.reset(x);
    if (!ny.is_subset_of(g.neighbors(x)))
        throw std::invalid_argument("extend_dominated: N(y) is not contained in N[x]");
    if (g.degree(y) > codegree(g, x, y) + 1)
        throw internal_error("extend_dominated: degree bound failed re-verification");

    if (coloring_minus_y.n() != g.n())
        throw std::invalid_argument("extend_dominated: coloring size mismatch");
    Coloring c = coloring_minus_y;
    if (c.color[y] != -1) throw std::invalid_argument("extend_dominated: y is already colored");
    for (int v = 0; v < g.n(); ++v)
        if (v != y && c.color[v] < 0)
            throw std::invalid_argument("extend_dominated: coloring must be total on g - y");
    for (auto [u, v] : g.edges())
        if (u != y && v != y && c.color[u] == c.color[v])
            throw std::invalid_argument("extend_dominated: coloring of g - y is improper");

    std::set<int> forbidden;
    for (int u = g.neighbors(y).next(0); u >= 0; u = g.neighbors(y).next(u + 1))
        forbidden.insert(c.color[u]);
    int col = 0;
    while (forbidden.count(col)) ++col;
    c.color[y] = col;
    assert_proper(g, c, "extend_dominated");
    return c;
}

}  // namespace clawchrome
