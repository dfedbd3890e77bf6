#include "clawchrome/oracle.hpp"

#include <algorithm>
#include <sstream>

#include "clawchrome/cliques.hpp"
#include "clawchrome/params.hpp"
#include "json.hpp"

namespace clawchrome {
namespace {

struct DsaturSearch {
    const Graph& g;
    int n;
    uint64_t budget;
    uint64_t nodes = 0;
    bool aborted = false;

    std::vector<int> color;
    std::vector<int> best_coloring;
    int best = 0;  // best complete coloring size found so far (upper bound)
    int lower = 1;

    explicit DsaturSearch(const Graph& g_, uint64_t budget_) : g(g_), n(g_.n()), budget(budget_) {
        color.assign(n, -1);
    }

    int saturation(int v) const {
        Bits seen(best + 1);
        int s = 0;
        for (int u = g.neighbors(v).next(0); u >= 0; u = g.neighbors(v).next(u + 1))
            if (color[u] >= 0 && !seen.test(color[u])) {
                seen.set(color[u]);
                ++s;
            }
        return s;
    }

    int pick_vertex() const {
        int bestv = -1, bsat = -1, bdeg = -1;
        for (int v = 0; v < n; ++v) {
            if (color[v] >= 0) continue;
            int s = saturation(v);
            int d = g.degree(v);
            if (s > bsat || (s == bsat && (d > bdeg))) {
                bestv = v;
                bsat = s;
                bdeg = d;
            }
        }
        return bestv;
    }

    void dfs(int colored_count, int used) {
        if (aborted) return;
        if (++nodes > budget) {
            aborted = true;
            return;
        }
        if (used >= best) return;  // cannot improve
        if (colored_count == n) {
            best = used;
            best_coloring = color;
            return;
        }
        int v = pick_vertex();
        Bits forbidden(used + 2);
        for (int u = g.neighbors(v).next(0); u >= 0; u = g.neighbors(v).next(u + 1))
            if (color[u] >= 0) forbidden.set(color[u]);
        for (int c = 0; c < std::min(used + 1, best - 1); ++c) {  // at most one fresh color
            if (forbidden.test(c)) continue;
            color[v] = c;
            dfs(colored_count + 1, std::max(used, c + 1));
            color[v] = -1;
            if (aborted) return;
            if (best == lower) return;
        }
    }
};

Coloring greedy_dsatur(const Graph& g) {
    int n = g.n();
    Coloring c(n);
    std::vector<Bits> adj_colors(n, Bits(n + 1));
    std::vector<int> sat(n, 0);
    for (int step = 0; step < n; ++step) {
        int v = -1, bs = -1, bd = -1;
        for (int u = 0; u < n; ++u) {
            if (c.color[u] >= 0) continue;
            if (sat[u] > bs || (sat[u] == bs && g.degree(u) > bd)) {
                v = u;
                bs = sat[u];
                bd = g.degree(u);
            }
        }
        int col = 0;
        while (adj_colors[v].test(col)) ++col;
        c.color[v] = col;
        for (int u = g.neighbors(v).next(0); u >= 0; u = g.neighbors(v).next(u + 1))
            if (c.color[u] < 0 && !adj_colors[u].test(col)) {
                adj_colors[u].set(col);
                ++sat[u];
            }
    }
    return c;
}

}  // namespace

ChiResult chromatic_number(const Graph& g, uint64_t node_budget) {
    int n = g.n();
    if (n == 0) return {true, 0, Coloring(0), 0};
    if (g.edge_count() == 0) {
        Coloring c(n);
        std::fill(c.color.begin(), c.color.end(), 0);
        return {true, 1, c, 0};
    }

    DsaturSearch s(g, node_budget);

    // exact clique seeds both the lower bound and a fixed partial coloring
    auto clique = maximum_clique(g);
    s.lower = (int)clique.size();

    Coloring ub = greedy_dsatur(g);
    s.best = ub.count_colors();
    s.best_coloring = ub.color;
    if (s.best == s.lower) return {true, s.best, ub, 0};

    for (size_t i = 0; i < clique.size(); ++i) s.color[clique[i]] = (int)i;
    s.dfs((int)clique.size(), (int)clique.size());

    ChiResult r;
    r.known = !s.aborted;
    r.chi = s.best;
    r.coloring.color = s.best_coloring;
    r.nodes = s.nodes;
    return r;
}

ListColorResult solve_list_coloring(const Graph& g, const ListAssignment& lists,
                                    uint64_t node_budget) {
    int n = g.n();
    if ((int)lists.lists.size() != n)
        throw std::invalid_argument("list coloring: list count mismatch");
    for (const auto& l : lists.lists)
        if (l.empty()) return {Feasibility::infeasible, {}};

    // dense color indexing
    std::vector<int> universe;
    for (const auto& l : lists.lists) universe.insert(universe.end(), l.begin(), l.end());
    std::sort(universe.begin(), universe.end());
    universe.erase(std::unique(universe.begin(), universe.end()), universe.end());
    int k = (int)universe.size();
    auto dense = [&](int c) {
        return (int)(std::lower_bound(universe.begin(), universe.end(), c) - universe.begin());
    };

    std::vector<Bits> avail(n, Bits(k));
    for (int v = 0; v < n; ++v)
        for (int c : lists.lists[v]) avail[v].set(dense(c));

    std::vector<int> assigned(n, -1);
    uint64_t nodes = 0;
    bool aborted = false;

    // MRV backtracking: always branch on the fewest-options vertex
    auto dfs = [&](auto&& self) -> bool {
        if (++nodes > node_budget) {
            aborted = true;
            return false;
        }
        int v = -1, opts = k + 1;
        for (int u = 0; u < n; ++u) {
            if (assigned[u] >= 0) continue;
            int cnt = avail[u].count();
            if (cnt == 0) return false;
            if (cnt < opts) {
                v = u;
                opts = cnt;
            }
        }
        if (v == -1) return true;
        for (int c = avail[v].next(0); c >= 0; c = avail[v].next(c + 1)) {
            assigned[v] = c;
            std::vector<int> pruned;
            for (int u = g.neighbors(v).next(0); u >= 0; u = g.neighbors(v).next(u + 1))
                if (assigned[u] < 0 && avail[u].test(c)) {
                    avail[u].reset(c);
                    pruned.push_back(u);
                }
            if (self(self)) return true;
            for (int u : pruned) avail[u].set(c);
            assigned[v] = -1;
            if (aborted) return false;
        }
        return false;
    };

    bool ok = dfs(dfs);
    if (aborted) return {Feasibility::unknown, {}};
    if (!ok) return {Feasibility::infeasible, {}};
    Coloring c(n);
    for (int v = 0; v < n; ++v) c.color[v] = universe[assigned[v]];
    return {Feasibility::feasible, c};
}

Feasibility list_chromatic_feasible(const Graph& g, const ListAssignment& lists,
                                    uint64_t node_budget) {
    return solve_list_coloring(g, lists, node_budget).status;
}

ChiResult clique_cover_number(const Graph& h, uint64_t node_budget) {
    return chromatic_number(h.complement(), node_budget);
}

std::string bound_kind_name(BoundKind k) { return k == BoundKind::delta2 ? "delta2" : "delta_e"; }

std::string BoundReport::to_jsonl() const {
    nlohmann::ordered_json j;
    j["graph_id"] = graph_id;
    j["n"] = n;
    j["delta2"] = delta2;
    j["delta_e"] = delta_e;
    j["omega"] = omega;
    if (chi_known)
        j["chi"] = chi;
    else
        j["chi"] = nullptr;
    j["colors_used"] = colors_used;
    j["bound"] = bound_kind_name(kind);
    j["slack"] = slack;
    j["violation"] = violation;
    j["tight"] = tight;
    j["violations"] = violations;
    return j.dump();
}

std::string BoundReport::csv_header() { return "graph_id,n,delta2,delta_e,chi,bound_ok"; }

std::string BoundReport::to_csv_row() const {
    std::ostringstream os;
    os << graph_id << ',' << n << ',' << delta2 << ',' << delta_e << ',';
    if (chi_known)
        os << chi;
    else
        os << "unknown";
    os << ',' << (violation ? "false" : "true");
    return os.str();
}

BoundReport verify_bound(const Graph& g, BoundKind kind, int slack, uint64_t node_budget,
                         const std::string& graph_id) {
    BoundReport r;
    r.graph_id = graph_id;
    r.n = g.n();
    r.kind = kind;
    r.slack = slack;
    r.delta2 = g.n() >= 2 ? delta2(g) : 0;
    r.delta_e = delta_e(g);
    r.omega = clique_number(g);
    auto chi = chromatic_number(g, node_budget);
    r.chi_known = chi.known;
    r.chi = chi.chi;
    if (chi.known) {
        r.violation = chi.chi > r.parameter() + slack;
        r.tight = chi.chi == r.parameter() + slack;
        if (r.violation) {
            std::ostringstream os;
            os << "chi=" << chi.chi << " exceeds " << bound_kind_name(kind) << "+"
               << slack << "=" << r.parameter() + slack;
            r.violations.push_back(os.str());
        }
    }
    return r;
}

}  // namespace clawchrome
