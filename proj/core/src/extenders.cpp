#include <algorithm>
#include <set>
#include <string>

#include "clawchrome/colorers.hpp"
#include "clawchrome/errors.hpp"
#include "clawchrome/params.hpp"

namespace clawchrome {
namespace {

// Shared preamble: the certificate must validate, coloring1 must be a proper
// total coloring of G[v1] whose colors fit the delta2(g)+3 palette.
struct Extension {
    const Graph& g;
    const TwoJoinCert& cert;
    Coloring work;
    int palette;

    Extension(const Graph& g_, const TwoJoinCert& cert_, const Coloring& coloring1,
              StripKind expected)
        : g(g_), cert(cert_), work(g_.n()) {
        if (cert.kind != expected)
            throw invalid_certificate("extender: certificate kind is " +
                                      strip_kind_name(cert.kind) + ", expected " +
                                      strip_kind_name(expected));
        cert.validate(g);
        palette = delta2(g) + 3;

        if (coloring1.n() != g.n())
            throw std::invalid_argument("extender: coloring1 size mismatch");
        std::vector<bool> side1(g.n(), false);
        for (int v : cert.v1) side1[v] = true;
        for (int v = 0; v < g.n(); ++v) {
            if (side1[v] && coloring1.color[v] < 0)
                throw std::invalid_argument("extender: coloring1 must be total on V1");
            if (!side1[v] && coloring1.color[v] >= 0)
                throw std::invalid_argument("extender: coloring1 must leave V2 uncolored");
        }
        for (int u : cert.v1) {
            if (coloring1.color[u] >= palette)
                throw std::invalid_argument(
                    "extender: insufficient palette: coloring1 uses color " +
                    std::to_string(coloring1.color[u]) + " outside 0.." +
                    std::to_string(palette - 1));
            for (int v : cert.v1)
                if (u < v && g.has_edge(u, v) && coloring1.color[u] == coloring1.color[v])
                    throw std::invalid_argument("extender: coloring1 is improper on G1");
        }
        work = coloring1;
    }

    int greedy(int v) {
        std::set<int> forbidden;
        for (int u = g.neighbors(v).next(0); u >= 0; u = g.neighbors(v).next(u + 1))
            if (work.color[u] >= 0) forbidden.insert(work.color[u]);
        for (int c = 0; c < palette; ++c)
            if (!forbidden.count(c)) {
                work.color[v] = c;
                return c;
            }
        throw internal_error("extender: palette exhausted at vertex " + std::to_string(v));
    }

    void force(int v, int c) {
        for (int u = g.neighbors(v).next(0); u >= 0; u = g.neighbors(v).next(u + 1))
            if (work.color[u] == c)
                throw internal_error("extender: forced color clashes at vertex " +
                                     std::to_string(v));
        work.color[v] = c;
    }

    Coloring finish(const char* who) {
        assert_proper_here(who);
        return work;
    }

    void assert_proper_here(const char* who) {
        auto check = is_proper(g, work);
        if (!check.proper)
            throw internal_error(std::string(who) + ": improper extension on edge (" +
                                 std::to_string(check.u) + "," + std::to_string(check.v) + ")");
    }
};

}  // namespace

Coloring extend_canonical_interval_2join(const Graph& g, const TwoJoinCert& cert,
                                         const Coloring& coloring1) {
    Extension ext(g, cert, coloring1, StripKind::canonical_interval);
    // b first (leftmost vertex of Y2), then everyone else left to right
    int b = cert.order[cert.order.size() - cert.y2.size()];
    ext.greedy(b);
    for (int v : cert.order)
        if (v != b) ext.greedy(v);
    return ext.finish("extend_canonical_interval_2join");
}

Coloring extend_antihat_2join(const Graph& g, const TwoJoinCert& cert, const Coloring& coloring1) {
    Extension ext(g, cert, coloring1, StripKind::antihat);
    int k = (int)cert.a.size();
    int anchor = -1;
    for (int i = 0; i < k; ++i)
        if (cert.a[i] >= 0 && cert.c[i] >= 0) {
            anchor = i;
            break;
        }
    if (anchor < 0)
        throw invalid_certificate("extend_antihat_2join: no index keeps both a_i and c_i");

    // a_i and its non-neighbor c_i share a color; B', then A', then the rest
    // of C can always dodge that doubled color
    int pi = ext.greedy(cert.a[anchor]);
    ext.force(cert.c[anchor], pi);
    for (int i = 0; i < k; ++i)
        if (cert.b[i] >= 0) ext.greedy(cert.b[i]);
    for (int i = 0; i < k; ++i)
        if (i != anchor && cert.a[i] >= 0) ext.greedy(cert.a[i]);
    for (int i = 0; i < k; ++i)
        if (i != anchor && cert.c[i] >= 0) ext.greedy(cert.c[i]);
    return ext.finish("extend_antihat_2join");
}

Coloring extend_strange_2join(const Graph& g, const TwoJoinCert& cert, const Coloring& coloring1) {
    Extension ext(g, cert, coloring1, StripKind::strange);
    // degrees in A ∪ B are pinned by codegree twins, so any greedy order
    // works there; c2 before c1 (deg 5 vs 4, palette is at least 5)
    for (const char* nm : {"a1", "a2", "b1", "b2", "b3", "c2", "c1"})
        ext.greedy(cert.roles.at(nm));
    return ext.finish("extend_strange_2join");
}

Coloring extend_gear_2join(const Graph& g, const TwoJoinCert& cert, const Coloring& coloring1) {
    Extension ext(g, cert, coloring1, StripKind::gear);
    auto role = [&](int i) {
        auto it = cert.roles.find("v" + std::to_string(i));
        return it == cert.roles.end() ? -1 : it->second;
    };

    // v1, v2, v4, v5 take four pairwise distinct colors; the proof's copy
    // pattern then closes the eight-vertex core
    std::set<int> chosen;
    for (int i : {1, 2, 4, 5}) {
        int v = role(i);
        std::set<int> forbidden = chosen;
        for (int u = g.neighbors(v).next(0); u >= 0; u = g.neighbors(v).next(u + 1))
            if (ext.work.color[u] >= 0) forbidden.insert(ext.work.color[u]);
        int picked = -1;
        for (int c = 0; c < ext.palette; ++c)
            if (!forbidden.count(c)) {
                picked = c;
                break;
            }
        if (picked < 0) throw internal_error("extend_gear_2join: fewer than four colors free");
        ext.work.color[v] = picked;
        chosen.insert(picked);
    }
    ext.force(role(3), ext.work.color[role(5)]);
    ext.force(role(6), ext.work.color[role(2)]);
    ext.force(role(7), ext.work.color[role(4)]);
    ext.force(role(8), ext.work.color[role(1)]);
    if (role(9) >= 0) ext.greedy(role(9));
    if (role(10) >= 0) ext.greedy(role(10));
    return ext.finish("extend_gear_2join");
}

Coloring extend_two_join(const Graph& g, const TwoJoinCert& cert, const Coloring& coloring1) {
    switch (cert.kind) {
        case StripKind::canonical_interval:
            return extend_canonical_interval_2join(g, cert, coloring1);
        case StripKind::antihat: return extend_antihat_2join(g, cert, coloring1);
        case StripKind::strange: return extend_strange_2join(g, cert, coloring1);
        case StripKind::gear: return extend_gear_2join(g, cert, coloring1);
    }
    throw invalid_certificate("extend_two_join: unknown strip kind");
}

}  // namespace clawchrome
