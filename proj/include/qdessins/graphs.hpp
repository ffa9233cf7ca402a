#pragma once

// Exact small-graph invariants and Shannon-capacity bounds: Petersen and
// pentagram graphs, branch-and-bound clique/independence/chromatic
// numbers, strong products, and the spectral Lovasz number for regular
// edge-transitive graphs.

#include <bitset>
#include <cmath>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qdessins/contextuality.hpp"
#include "qdessins/matrix.hpp"

namespace qdessins {

constexpr int kMaxVertices = 128;
using VertexSet = std::bitset<kMaxVertices>;

struct SmallGraph {
    int n = 0;
    std::vector<VertexSet> adj;

    explicit SmallGraph(int vertices = 0) : n(vertices), adj(vertices) {
        if (vertices > kMaxVertices) throw std::invalid_argument("vertex cap is 128");
    }

    void add_edge(int u, int v) {
        if (u == v) throw std::invalid_argument("no loops");
        adj[u].set(v);
        adj[v].set(u);
    }
    bool has_edge(int u, int v) const { return adj[u].test(v); }
    int degree(int v) const { return static_cast<int>(adj[v].count()); }
    long edge_count() const {
        long e = 0;
        for (int v = 0; v < n; ++v) e += degree(v);
        return e / 2;
    }
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (has_edge(u, v)) out.push_back({u, v});
        return out;
    }
};

inline SmallGraph complement(const SmallGraph& g) {
    SmallGraph c(g.n);
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (!g.has_edge(u, v)) c.add_edge(u, v);
    return c;
}

// Kneser construction on the 2-subsets of {1..5}: vertices are pairs,
// adjacent when disjoint.
inline SmallGraph petersen() {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) pairs.push_back({i, j});
    SmallGraph g(10);
    for (int u = 0; u < 10; ++u)
        for (int v = u + 1; v < 10; ++v) {
            auto [a, b] = pairs[u];
            auto [c, d] = pairs[v];
            if (a != c && a != d && b != c && b != d) g.add_edge(u, v);
        }
    return g;
}

inline SmallGraph pentagram_graph() { return complement(petersen()); }

inline SmallGraph cycle_graph(int n) {
    SmallGraph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

inline SmallGraph complete_graph(int n) {
    SmallGraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

// Adjacency of projective observables under commutation.
inline SmallGraph commutation_graph(const std::vector<Pauli>& points) {
    SmallGraph g(static_cast<int>(points.size()));
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (commutes(points[u], points[v])) g.add_edge(u, v);
    return g;
}

// ---------------------------------------------------------------------------
// Exact invariants

namespace detail {

// Tomita-style branch and bound with greedy-coloring bounds.
struct MaxCliqueSearch {
    const SmallGraph& g;
    int best = 0;
    std::vector<int> best_clique, current;

    explicit MaxCliqueSearch(const SmallGraph& graph) : g(graph) {}

    void expand(VertexSet cand) {
        if (cand.none()) {
            if (static_cast<int>(current.size()) > best) {
                best = static_cast<int>(current.size());
                best_clique = current;
            }
            return;
        }
        // greedy coloring of the candidates; color number bounds clique growth
        std::vector<int> verts, color;
        VertexSet uncolored = cand;
        int c = 0;
        while (uncolored.any()) {
            ++c;
            VertexSet cls = uncolored;
            while (cls.any()) {
                int v = -1;
                for (int i = 0; i < g.n; ++i)
                    if (cls.test(i)) { v = i; break; }
                verts.push_back(v);
                color.push_back(c);
                uncolored.reset(v);
                cls.reset(v);
                cls &= ~g.adj[v];
            }
        }
        for (int i = static_cast<int>(verts.size()) - 1; i >= 0; --i) {
            if (static_cast<int>(current.size()) + color[i] <= best) return;
            int v = verts[i];
            current.push_back(v);
            expand(cand & g.adj[v]);
            current.pop_back();
            cand.reset(v);
        }
    }
};

}  // namespace detail

struct CliqueResult {
    int size = 0;
    std::vector<int> witness;
};

inline CliqueResult max_clique(const SmallGraph& g) {
    detail::MaxCliqueSearch s(g);
    VertexSet all;
    for (int i = 0; i < g.n; ++i) all.set(i);
    s.expand(all);
    return {s.best, s.best_clique};
}

inline CliqueResult max_independent_set(const SmallGraph& g) { return max_clique(complement(g)); }

inline int independence_number(const SmallGraph& g) { return max_independent_set(g).size; }
inline int clique_number(const SmallGraph& g) { return max_clique(g).size; }

// Exact chromatic number: iterative deepening on the color count, seeded
// by a maximum clique.
inline int chromatic_number(const SmallGraph& g) {
    if (g.n > 64) throw std::invalid_argument("vertex cap for coloring is 64");
    if (g.n == 0) return 0;
    int lower = clique_number(g);
    std::vector<int> order(g.n);
    for (int i = 0; i < g.n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return g.degree(a) > g.degree(b); });
    for (int k = lower;; ++k) {
        std::vector<int> color(g.n, -1);
        std::function<bool(int, int)> rec = [&](int idx, int used) -> bool {
            if (idx == g.n) return true;
            int v = order[idx];
            int limit = std::min(k, used + 1);  // new colors introduced in order
            for (int c = 0; c < limit; ++c) {
                bool ok = true;
                for (int u = 0; u < g.n && ok; ++u)
                    if (color[u] == c && g.has_edge(u, v)) ok = false;
                if (!ok) continue;
                color[v] = c;
                if (rec(idx + 1, std::max(used, c + 1))) return true;
                color[v] = -1;
            }
            return false;
        };
        if (rec(0, 0)) return k;
    }
}

inline std::pair<int, int> clique_and_chromatic(const SmallGraph& g) {
    return {clique_number(g), chromatic_number(g)};
}

// Proper edge coloring with at most k colors; nullopt when impossible.
inline std::optional<std::vector<int>> edge_coloring(const SmallGraph& g, int k) {
    auto es = g.edges();
    std::vector<int> color(es.size(), -1);
    std::function<bool(size_t, int)> rec = [&](size_t idx, int used) -> bool {
        if (idx == es.size()) return true;
        auto [u, v] = es[idx];
        int limit = std::min(k, used + 1);
        for (int c = 0; c < limit; ++c) {
            bool ok = true;
            for (size_t j = 0; j < idx && ok; ++j) {
                if (color[j] != c) continue;
                auto [a, b] = es[j];
                if (a == u || a == v || b == u || b == v) ok = false;
            }
            if (!ok) continue;
            color[idx] = c;
            if (rec(idx + 1, std::max(used, c + 1))) return true;
            color[idx] = -1;
        }
        return false;
    };
    if (rec(0, 0)) return color;
    return std::nullopt;
}

inline SmallGraph strong_product(const SmallGraph& g, const SmallGraph& h) {
    if (g.n * h.n > kMaxVertices) throw std::invalid_argument("product exceeds vertex cap");
    SmallGraph p(g.n * h.n);
    auto id = [&](int a, int b) { return a * h.n + b; };
    for (int a = 0; a < g.n; ++a)
        for (int b = 0; b < h.n; ++b)
            for (int c = a; c < g.n; ++c)
                for (int d = 0; d < h.n; ++d) {
                    if (a == c && d <= b) continue;
                    bool ga = (a == c) || g.has_edge(a, c);
                    bool hb = (b == d) || h.has_edge(b, d);
                    if (ga && hb) p.add_edge(id(a, b), id(c, d));
                }
    return p;
}

// ---------------------------------------------------------------------------
// Automorphisms, edge-transitivity, Lovasz theta

inline void enumerate_automorphisms(const SmallGraph& g,
                                    const std::function<void(const std::vector<int>&)>& cb) {
    if (g.n > 12) throw std::invalid_argument("automorphism cap is 12 vertices");
    std::vector<int> phi(g.n, -1);
    std::vector<bool> used(g.n, false);
    std::function<void(int)> rec = [&](int v) {
        if (v == g.n) {
            cb(phi);
            return;
        }
        for (int w = 0; w < g.n; ++w) {
            if (used[w] || g.degree(w) != g.degree(v)) continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u)
                if (g.has_edge(u, v) != g.has_edge(phi[u], w)) ok = false;
            if (!ok) continue;
            phi[v] = w;
            used[w] = true;
            rec(v + 1);
            used[w] = false;
            phi[v] = -1;
        }
    };
    rec(0);
}

inline bool is_regular(const SmallGraph& g) {
    for (int v = 1; v < g.n; ++v)
        if (g.degree(v) != g.degree(0)) return false;
    return true;
}

inline bool is_edge_transitive(const SmallGraph& g) {
    auto es = g.edges();
    if (es.empty()) return true;
    auto edge_index = [&](int u, int v) {
        if (u > v) std::swap(u, v);
        for (size_t i = 0; i < es.size(); ++i)
            if (es[i] == std::make_pair(u, v)) return static_cast<int>(i);
        return -1;
    };
    std::vector<bool> orbit(es.size(), false);
    orbit[0] = true;
    size_t reached = 1;
    enumerate_automorphisms(g, [&](const std::vector<int>& phi) {
        for (size_t i = 0; i < es.size(); ++i) {
            if (!orbit[i]) continue;
            int j = edge_index(phi[es[i].first], phi[es[i].second]);
            if (!orbit[j]) { orbit[j] = true; ++reached; }
        }
    });
    // a single pass over the full automorphism group already closes orbits
    return reached == es.size();
}

// theta = -n lambda_min / (lambda_1 - lambda_min), valid for regular
// edge-transitive graphs; refuses anything else.
inline double lovasz_theta_edge_transitive(const SmallGraph& g) {
    if (!is_regular(g)) throw std::invalid_argument("graph is not regular");
    if (!is_edge_transitive(g))
        throw std::invalid_argument("graph is not edge-transitive; no spectral theta");
    Mat a(g.n);
    for (int u = 0; u < g.n; ++u)
        for (int v = 0; v < g.n; ++v)
            if (g.has_edge(u, v)) a.at(u, v) = 1;
    auto ev = hermitian_eigenvalues(a);
    double lmin = ev.front(), lmax = ev.back();
    return -g.n * lmin / (lmax - lmin);
}

inline std::vector<double> adjacency_spectrum(const SmallGraph& g) {
    Mat a(g.n);
    for (int u = 0; u < g.n; ++u)
        for (int v = 0; v < g.n; ++v)
            if (g.has_edge(u, v)) a.at(u, v) = 1;
    return hermitian_eigenvalues(a);
}

struct CapacityReport {
    int alpha = 0;
    int omega = 0;
    int chi = 0;
    std::optional<double> theta;
    double shannon_lower = 0;
    std::optional<double> shannon_upper;
    int alpha_square = 0;                 // alpha(G x G), strong product
    std::vector<int> square_witness;      // independent set in G x G
    int complement_omega = 0, complement_chi = 0;  // omega(G) <= theta(comp G) <= chi(G)
};

inline CapacityReport capacity_report(const SmallGraph& g, int max_k = 2) {
    CapacityReport r;
    r.alpha = independence_number(g);
    auto [om, ch] = clique_and_chromatic(g);
    r.omega = om;
    r.chi = ch;
    SmallGraph gc = complement(g);
    auto [com, cch] = clique_and_chromatic(gc);
    r.complement_omega = com;
    r.complement_chi = cch;
    r.shannon_lower = r.alpha;
    if (max_k >= 2 && g.n * g.n <= kMaxVertices) {
        auto mis = max_independent_set(strong_product(g, g));
        r.alpha_square = mis.size;
        r.square_witness = mis.witness;
        r.shannon_lower = std::max(r.shannon_lower, std::sqrt(double(r.alpha_square)));
    }
    if (g.n <= 12 && is_regular(g) && is_edge_transitive(g)) {
        r.theta = lovasz_theta_edge_transitive(g);
        r.shannon_upper = r.theta;
    }
    return r;
}

// Backtracking graph isomorphism (degree-pruned), for 10-vertex checks.
inline bool graphs_isomorphic(const SmallGraph& g, const SmallGraph& h) {
    if (g.n != h.n || g.edge_count() != h.edge_count()) return false;
    std::vector<int> dg, dh;
    for (int v = 0; v < g.n; ++v) dg.push_back(g.degree(v));
    for (int v = 0; v < h.n; ++v) dh.push_back(h.degree(v));
    auto sg = dg, sh = dh;
    std::sort(sg.begin(), sg.end());
    std::sort(sh.begin(), sh.end());
    if (sg != sh) return false;
    std::vector<int> phi(g.n, -1);
    std::vector<bool> used(h.n, false);
    std::function<bool(int)> rec = [&](int v) -> bool {
        if (v == g.n) return true;
        for (int w = 0; w < h.n; ++w) {
            if (used[w] || dg[v] != dh[w]) continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u)
                if (g.has_edge(u, v) != h.has_edge(phi[u], w)) ok = false;
            if (!ok) continue;
            phi[v] = w;
            used[w] = true;
            if (rec(v + 1)) return true;
            used[w] = false;
            phi[v] = -1;
        }
        return false;
    };
    return rec(0);
}

inline std::string graph_to_dot(const SmallGraph& g, const std::string& name = "graph0") {
    std::string out = "graph " + name + " {\n";
    for (auto [u, v] : g.edges())
        out += "  v" + std::to_string(u) + " -- v" + std::to_string(v) + ";\n";
    out += "}\n";
    return out;
}

}  // namespace qdessins
