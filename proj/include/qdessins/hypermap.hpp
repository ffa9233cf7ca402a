#pragma once

// Dessins d'enfants as permutation pairs (alpha, beta) on half-edges.
// Composition is left-to-right and gamma := (alpha*beta)^-1, so that
// alpha*beta*gamma = 1 holds literally.

#include <stdexcept>
#include <string>
#include <vector>

#include "qdessins/perm.hpp"

namespace qdessins {

struct Hypermap {
    int n = 1;
    Perm alpha, beta;

    Hypermap() : alpha(1), beta(1) {}
    Hypermap(int half_edges, Perm a, Perm b)
        : n(half_edges), alpha(std::move(a)), beta(std::move(b)) {
        if (alpha.degree() != n || beta.degree() != n)
            throw std::invalid_argument("permutation degree != half-edge count");
    }

    Perm gamma() const { return inverse(compose(alpha, beta)); }
};

struct Passport {
    std::vector<int> lambda0, lambda1, lambdaInf;  // cycle types of alpha, beta, gamma
    bool operator==(const Passport& o) const {
        return lambda0 == o.lambda0 && lambda1 == o.lambda1 && lambdaInf == o.lambdaInf;
    }
};

inline bool is_connected(const Hypermap& m) {
    std::vector<bool> seen(m.n, false);
    std::vector<int> stack{0};
    seen[0] = true;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : {m.alpha(v), m.beta(v), inverse(m.alpha)(v), inverse(m.beta)(v)}) {
            if (!seen[w]) {
                seen[w] = true;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count == m.n;
}

inline Passport passport(const Hypermap& m) {
    if (!is_connected(m)) throw std::invalid_argument("hypermap is not connected");
    return Passport{cycle_type(m.alpha), cycle_type(m.beta), cycle_type(m.gamma())};
}

inline int genus(const Hypermap& m) {
    Passport p = passport(m);
    int B = static_cast<int>(p.lambda0.size());
    int W = static_cast<int>(p.lambda1.size());
    int F = static_cast<int>(p.lambdaInf.size());
    int twice = 2 - B - W - F + m.n;
    if (twice < 0 || twice % 2 != 0)
        throw std::logic_error("Euler formula gave a non-integer or negative genus");
    return twice / 2;
}

// DOT drawing with black/white bipartite vertices; half-edge i produces an
// edge between its alpha-cycle (black) and beta-cycle (white).
inline std::string hypermap_to_dot(const Hypermap& m, const std::string& name = "dessin") {
    auto ac = cycles(m.alpha), bc = cycles(m.beta);
    std::vector<int> black(m.n), white(m.n);
    for (size_t c = 0; c < ac.size(); ++c)
        for (int v : ac[c]) black[v] = static_cast<int>(c);
    for (size_t c = 0; c < bc.size(); ++c)
        for (int v : bc[c]) white[v] = static_cast<int>(c);
    std::string out = "graph " + name + " {\n";
    for (size_t c = 0; c < ac.size(); ++c)
        out += "  b" + std::to_string(c) + " [shape=circle,style=filled,fillcolor=black,label=\"\"];\n";
    for (size_t c = 0; c < bc.size(); ++c)
        out += "  w" + std::to_string(c) + " [shape=circle,fillcolor=white,label=\"\"];\n";
    for (int i = 0; i < m.n; ++i)
        out += "  b" + std::to_string(black[i]) + " -- w" + std::to_string(white[i]) +
               " [label=\"" + std::to_string(i + 1) + "\"];\n";
    out += "}\n";
    return out;
}

}  // namespace qdessins
