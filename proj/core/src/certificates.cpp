#include "clawchrome/certificates.hpp"

#include <algorithm>
#include <set>

#include "clawchrome/errors.hpp"
#include "clawchrome/recognize.hpp"
#include "json.hpp"

namespace clawchrome {

using ordered_json = nlohmann::ordered_json;

int CircularIntervalRep::arc_length(size_t i) const {
    auto [lo, hi] = arcs[i];
    int len = ((hi - lo) % n() + n()) % n() + 1;
    return len;
}

Graph CircularIntervalRep::build_graph() const {
    Graph g(n());
    for (size_t i = 0; i < arcs.size(); ++i) {
        int lo = arcs[i].first;
        int len = arc_length(i);
        for (int p = 0; p < len; ++p)
            for (int q = p + 1; q < len; ++q) {
                int u = order[(lo + p) % n()];
                int v = order[(lo + q) % n()];
                if (u != v) g.add_edge(u, v);
            }
    }
    return g;
}

bool CircularIntervalRep::matches(const Graph& g) const {
    if (n() != g.n()) return false;
    std::vector<bool> seen(n(), false);
    for (int v : order) {
        if (v < 0 || v >= n() || seen[v]) return false;
        seen[v] = true;
    }
    for (auto [lo, hi] : arcs)
        if (lo < 0 || lo >= n() || hi < 0 || hi >= n()) return false;
    return build_graph() == g;
}

std::vector<bool> CircularIntervalRep::rightmost_of_length(int len) const {
    std::vector<bool> right(n(), false);
    for (size_t i = 0; i < arcs.size(); ++i)
        if (arc_length(i) == len) right[arcs[i].second] = true;
    return right;
}

int CircularIntervalRep::longest_arc() const {
    int best = 1;  // singleton arcs are implicit
    for (size_t i = 0; i < arcs.size(); ++i) best = std::max(best, arc_length(i));
    return best;
}

std::string strip_kind_name(StripKind k) {
    switch (k) {
        case StripKind::canonical_interval: return "canonical-interval";
        case StripKind::antihat: return "antihat";
        case StripKind::strange: return "strange";
        case StripKind::gear: return "gear";
    }
    return "?";
}

StripKind strip_kind_from_name(const std::string& name) {
    if (name == "canonical-interval") return StripKind::canonical_interval;
    if (name == "antihat") return StripKind::antihat;
    if (name == "strange") return StripKind::strange;
    if (name == "gear") return StripKind::gear;
    throw invalid_certificate("unknown strip kind: " + name);
}

namespace {

void fail(const std::string& why) { throw invalid_certificate("2-join certificate: " + why); }

struct SideIndex {
    std::vector<int> local_of;  // global id -> local index or -1

    SideIndex(int n, const std::vector<int>& side) : local_of(n, -1) {
        for (size_t i = 0; i < side.size(); ++i) local_of[side[i]] = (int)i;
    }
    bool contains(int v) const { return local_of[v] >= 0; }
};

void check_same_set(const std::vector<int>& got, const std::vector<int>& want,
                    const std::string& what) {
    std::set<int> a(got.begin(), got.end()), b(want.begin(), want.end());
    if (a != b) fail(what);
}

}  // namespace

void TwoJoinCert::validate_structure(const Graph& g) const {
    const int n = g.n();
    std::vector<int> owner(n, -1);
    for (int v : v1) {
        g.check_vertex(v);
        if (owner[v] != -1) fail("v1/v2 do not partition V");
        owner[v] = 1;
    }
    for (int v : v2) {
        g.check_vertex(v);
        if (owner[v] != -1) fail("v1/v2 do not partition V");
        owner[v] = 2;
    }
    for (int v = 0; v < n; ++v)
        if (owner[v] == -1) fail("v1/v2 do not cover V");

    auto check_side = [&](const std::vector<int>& s, int side, const std::string& name) {
        if (s.empty()) fail(name + " is empty");
        for (int v : s)
            if (owner[v] != side) fail(name + " not inside its side");
    };
    check_side(x1, 1, "x1");
    check_side(y1, 1, "y1");
    check_side(x2, 2, "x2");
    check_side(y2, 2, "y2");

    std::set<int> x2s(x2.begin(), x2.end()), y2s(y2.begin(), y2.end());
    for (int v : x2)
        if (y2s.count(v)) fail("x2 and y2 intersect");

    auto union_clique = [&](const std::vector<int>& a, const std::vector<int>& b,
                            const std::string& name) {
        std::vector<int> u = a;
        u.insert(u.end(), b.begin(), b.end());
        if (!is_clique(g, u)) fail(name + " is not a clique");
    };
    if (!is_clique(g, x1)) fail("x1 is not a clique");
    if (!is_clique(g, y1)) fail("y1 is not a clique");
    if (!is_clique(g, x2)) fail("x2 is not a clique");
    if (!is_clique(g, y2)) fail("y2 is not a clique");
    union_clique(x1, x2, "X1 ∪ X2");
    union_clique(y1, y2, "Y1 ∪ Y2");

    std::set<int> x1s(x1.begin(), x1.end()), y1s(y1.begin(), y1.end());
    for (int u : v1)
        for (int w : v2)
            if (g.has_edge(u, w)) {
                bool in_x = x1s.count(u) && x2s.count(w);
                bool in_y = y1s.count(u) && y2s.count(w);
                if (!in_x && !in_y) fail("stray edge between the sides");
            }
}

void TwoJoinCert::validate(const Graph& g) const {
    validate_structure(g);
    const int n = g.n();

    // ribbon-specific adjacency on G2, checked edge-for-edge
    Graph g2 = g.induced(v2);
    SideIndex idx(n, v2);
    auto local = [&](int v) { return idx.local_of[v]; };

    if (kind == StripKind::canonical_interval) {
        if (order.size() != v2.size()) fail("canonical-interval order must list V2");
        check_same_set(order, v2, "canonical-interval order must list V2");
        check_same_set(std::vector<int>(order.begin(), order.begin() + x2.size()), x2,
                       "X2 must be the leftmost vertices of the order");
        check_same_set(std::vector<int>(order.end() - y2.size(), order.end()), y2,
                       "Y2 must be the rightmost vertices of the order");
        // linear interval structure: adjacency intervals are contiguous
        int k = (int)order.size();
        for (int i = 0; i < k; ++i)
            for (int j = i + 2; j < k; ++j) {
                if (!g.has_edge(order[i], order[j])) continue;
                for (int t = i + 1; t < j; ++t)
                    if (!g.has_edge(order[i], order[t]) || !g.has_edge(order[t], order[j]))
                        fail("order is not a linear interval representation");
            }
        int m2 = g2.edge_count();
        if (m2 == (int)v2.size() * ((int)v2.size() - 1) / 2)
            fail("canonical-interval strip must not be a clique");
        return;
    }

    // remaining kinds pin an exact adjacency table
    Graph expect((int)v2.size());
    auto add = [&](int gu, int gv) {
        if (gu >= 0 && gv >= 0) expect.add_edge(local(gu), local(gv));
    };

    if (kind == StripKind::antihat) {
        size_t k = a.size();
        if (k < 3 || b.size() != k || c.size() != k) fail("antihat role arrays malformed");
        std::set<int> present;
        int c_alive = 0;
        for (size_t i = 0; i < k; ++i)
            for (int v : {a[i], b[i], c[i]}) {
                if (v == -1) continue;
                if (!idx.contains(v) || !present.insert(v).second)
                    fail("antihat roles must injectively label V2");
            }
        if (present.size() != v2.size()) fail("antihat roles must cover V2");
        for (size_t i = 0; i < k; ++i)
            if (c[i] >= 0) ++c_alive;
        if (c_alive < 2) fail("antihat needs at least two surviving C vertices");

        std::vector<int> alive_a, alive_b;
        for (size_t i = 0; i < k; ++i) {
            if (a[i] >= 0) alive_a.push_back(a[i]);
            if (b[i] >= 0) alive_b.push_back(b[i]);
        }
        check_same_set(alive_a, x2, "X2 must equal the surviving A vertices");
        check_same_set(alive_b, y2, "Y2 must equal the surviving B vertices");

        for (size_t i = 0; i < k; ++i)
            for (size_t j = i + 1; j < k; ++j) {
                add(a[i], a[j]);
                add(b[i], b[j]);
                add(c[i], c[j]);
            }
        for (size_t i = 0; i < k; ++i) {
            add(a[i], b[i]);
            for (size_t j = 0; j < k; ++j)
                if (i != j) {
                    add(a[i], c[j]);
                    add(b[i], c[j]);
                }
        }
        if (!(expect == g2)) fail("antihat ribbon adjacency mismatch");
        if (!contains_w5_subgraph(g2)) fail("antihat ribbon must contain a W5");
        bool pair_found = false;
        for (size_t i = 0; i < k; ++i) pair_found |= (a[i] >= 0 && c[i] >= 0);
        if (!pair_found) fail("antihat ribbon must keep some a_i together with c_i");
        return;
    }

    if (kind == StripKind::strange) {
        static const char* names[] = {"a1", "a2", "b1", "b2", "b3", "c1", "c2"};
        std::vector<int> r;
        for (const char* nm : names) {
            auto it = roles.find(nm);
            if (it == roles.end()) fail(std::string("strange role missing: ") + nm);
            r.push_back(it->second);
        }
        std::set<int> distinct(r.begin(), r.end());
        if (distinct.size() != 7 || v2.size() != 7) fail("strange ribbon must have 7 vertices");
        for (int v : r)
            if (!idx.contains(v)) fail("strange role outside V2");
        check_same_set({r[0], r[1]}, x2, "X2 must be {a1,a2}");
        check_same_set({r[2], r[3], r[4]}, y2, "Y2 must be {b1,b2,b3}");
        int a1 = r[0], a2 = r[1], b1 = r[2], b2 = r[3], b3 = r[4], c1 = r[5], c2 = r[6];
        add(a1, a2);
        add(b1, b2);
        add(b1, b3);
        add(b2, b3);
        add(c1, c2);
        add(a1, b1);
        add(c1, a2);
        add(c1, b2);
        add(c1, b3);
        add(c2, a1);
        add(c2, a2);
        add(c2, b1);
        add(c2, b2);
        if (!(expect == g2)) fail("strange ribbon adjacency mismatch");
        return;
    }

    // gear
    std::vector<int> v_(11, -1);
    for (int i = 1; i <= 10; ++i) {
        auto it = roles.find("v" + std::to_string(i));
        if (it != roles.end()) v_[i] = it->second;
        if (v_[i] == -1 && i <= 8) fail("gear roles v1..v8 are required");
    }
    std::set<int> present;
    for (int i = 1; i <= 10; ++i)
        if (v_[i] >= 0) {
            if (!idx.contains(v_[i]) || !present.insert(v_[i]).second)
                fail("gear roles must injectively label V2");
        }
    if (present.size() != v2.size()) fail("gear roles must cover V2");
    check_same_set({v_[1], v_[2]}, x2, "X2 must be {v1,v2}");
    check_same_set({v_[4], v_[5]}, y2, "Y2 must be {v4,v5}");
    for (int i = 1; i <= 6; ++i) add(v_[i], v_[i % 6 + 1]);
    for (int t : {1, 2, 3, 6}) add(v_[7], v_[t]);
    for (int t : {3, 4, 5, 6, 7}) add(v_[8], v_[t]);
    for (int t : {1, 3, 4, 6, 7, 8}) add(v_[9], v_[t]);
    for (int t : {2, 3, 5, 6, 7, 8}) add(v_[10], v_[t]);
    if (!(expect == g2)) fail("gear ribbon adjacency mismatch");
}

void ThreeCliquedCert::validate(const Graph& g) const {
    std::vector<int> owner(g.n(), -1);
    const std::vector<int>* parts[3] = {&k1, &k2, &k3};
    for (int p = 0; p < 3; ++p) {
        for (int v : *parts[p]) {
            g.check_vertex(v);
            if (owner[v] != -1)
                throw invalid_certificate("three-cliqued certificate: parts overlap");
            owner[v] = p;
        }
        if (!is_clique(g, *parts[p]))
            throw invalid_certificate("three-cliqued certificate: part is not a clique");
    }
    for (int v = 0; v < g.n(); ++v)
        if (owner[v] == -1)
            throw invalid_certificate("three-cliqued certificate: uncovered vertex");
}

namespace {

ordered_json parse(const std::string& text) {
    try {
        return ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw invalid_certificate(std::string("bad certificate JSON: ") + e.what());
    }
}

std::vector<int> int_list(const ordered_json& j, const char* key) {
    if (!j.contains(key)) throw invalid_certificate(std::string("missing key: ") + key);
    return j.at(key).get<std::vector<int>>();
}

}  // namespace

CircularIntervalRep rep_from_json(const std::string& text) {
    ordered_json j = parse(text);
    CircularIntervalRep rep;
    rep.order = int_list(j, "order");
    for (const auto& arc : j.at("arcs")) {
        if (!arc.is_array() || arc.size() != 2)
            throw invalid_certificate("arcs must be [lo,hi] pairs");
        rep.arcs.emplace_back(arc[0].get<int>(), arc[1].get<int>());
    }
    return rep;
}

std::string rep_to_json(const CircularIntervalRep& rep) {
    ordered_json j;
    j["order"] = rep.order;
    auto arcs = ordered_json::array();
    for (auto [lo, hi] : rep.arcs) arcs.push_back({lo, hi});
    j["arcs"] = arcs;
    return j.dump();
}

TwoJoinCert two_join_from_json(const std::string& text) {
    ordered_json j = parse(text);
    TwoJoinCert cert;
    cert.v1 = int_list(j, "v1");
    cert.v2 = int_list(j, "v2");
    cert.x1 = int_list(j, "x1");
    cert.y1 = int_list(j, "y1");
    cert.x2 = int_list(j, "x2");
    cert.y2 = int_list(j, "y2");
    cert.kind = strip_kind_from_name(j.at("kind").get<std::string>());
    const auto& data = j.at("data");
    if (cert.kind == StripKind::canonical_interval) {
        cert.order = data.at("order").get<std::vector<int>>();
    } else if (cert.kind == StripKind::antihat) {
        cert.a = data.at("a").get<std::vector<int>>();
        cert.b = data.at("b").get<std::vector<int>>();
        cert.c = data.at("c").get<std::vector<int>>();
    } else {
        for (auto it = data.begin(); it != data.end(); ++it)
            cert.roles[it.key()] = it.value().get<int>();
    }
    return cert;
}

std::string two_join_to_json(const TwoJoinCert& cert) {
    ordered_json j;
    j["v1"] = cert.v1;
    j["v2"] = cert.v2;
    j["x1"] = cert.x1;
    j["y1"] = cert.y1;
    j["x2"] = cert.x2;
    j["y2"] = cert.y2;
    j["kind"] = strip_kind_name(cert.kind);
    ordered_json data;
    if (cert.kind == StripKind::canonical_interval) {
        data["order"] = cert.order;
    } else if (cert.kind == StripKind::antihat) {
        data["a"] = cert.a;
        data["b"] = cert.b;
        data["c"] = cert.c;
    } else {
        for (const auto& [k, v] : cert.roles) data[k] = v;
    }
    j["data"] = data;
    return j.dump();
}

ThreeCliquedCert three_cliqued_from_json(const std::string& text) {
    ordered_json j = parse(text);
    return {int_list(j, "k1"), int_list(j, "k2"), int_list(j, "k3")};
}

std::string three_cliqued_to_json(const ThreeCliquedCert& cert) {
    ordered_json j;
    j["k1"] = cert.k1;
    j["k2"] = cert.k2;
    j["k3"] = cert.k3;
    return j.dump();
}

Coloring coloring_from_json(const std::string& text, int n) {
    ordered_json j = parse(text);
    if (j.contains("coloring")) j = j.at("coloring");
    Coloring c(n);
    for (auto it = j.begin(); it != j.end(); ++it) {
        int v = std::stoi(it.key());
        if (v < 0 || v >= n) throw invalid_certificate("coloring key out of range");
        c.color[v] = it.value().get<int>();
    }
    return c;
}

std::string coloring_to_json(const Coloring& c) {
    ordered_json j = ordered_json::object();
    for (int v = 0; v < c.n(); ++v)
        if (c.color[v] >= 0) j[std::to_string(v)] = c.color[v];
    return j.dump();
}

ListAssignment lists_from_json(const std::string& text, int n) {
    ordered_json j = parse(text);
    ListAssignment a;
    a.lists.assign(n, {});
    for (auto it = j.begin(); it != j.end(); ++it) {
        int v = std::stoi(it.key());
        if (v < 0 || v >= n) throw invalid_certificate("list key out of range");
        a.lists[v] = it.value().get<std::vector<int>>();
    }
    return a;
}

std::string lists_to_json(const ListAssignment& lists) {
    ordered_json j = ordered_json::object();
    for (int v = 0; v < lists.n(); ++v) j[std::to_string(v)] = lists.lists[v];
    return j.dump();
}

}  // namespace clawchrome
