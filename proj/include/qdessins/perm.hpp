#pragma once

// Permutations on {0..n-1}, composed left-to-right: (a*b)(x) = b[a[x]].

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace qdessins {

struct Perm {
    std::vector<int> img;

    Perm() = default;
    explicit Perm(int n) : img(n) { std::iota(img.begin(), img.end(), 0); }
    explicit Perm(std::vector<int> images) : img(std::move(images)) {}

    int degree() const { return static_cast<int>(img.size()); }
    int operator()(int x) const { return img[x]; }
    bool is_identity() const {
        for (int i = 0; i < degree(); ++i)
            if (img[i] != i) return false;
        return true;
    }
    bool operator==(const Perm& o) const { return img == o.img; }
    bool operator<(const Perm& o) const { return img < o.img; }
};

inline Perm compose(const Perm& a, const Perm& b) {
    Perm r;
    r.img.resize(a.degree());
    for (int i = 0; i < a.degree(); ++i) r.img[i] = b.img[a.img[i]];
    return r;
}

inline Perm inverse(const Perm& a) {
    Perm r;
    r.img.resize(a.degree());
    for (int i = 0; i < a.degree(); ++i) r.img[a.img[i]] = i;
    return r;
}

// p^-1 * a * p (relabels points by p)
inline Perm conjugate(const Perm& a, const Perm& p) {
    return compose(inverse(p), compose(a, p));
}

inline std::vector<std::vector<int>> cycles(const Perm& a) {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(a.degree(), false);
    for (int i = 0; i < a.degree(); ++i) {
        if (seen[i]) continue;
        std::vector<int> cyc;
        int j = i;
        do {
            seen[j] = true;
            cyc.push_back(j);
            j = a.img[j];
        } while (j != i);
        out.push_back(std::move(cyc));
    }
    return out;
}

// Descending cycle type, fixed points included.
inline std::vector<int> cycle_type(const Perm& a) {
    std::vector<int> t;
    for (auto& c : cycles(a)) t.push_back(static_cast<int>(c.size()));
    std::sort(t.rbegin(), t.rend());
    return t;
}

inline int element_order(const Perm& a) {
    long long ord = 1;
    for (auto& c : cycles(a)) ord = std::lcm(ord, (long long)c.size());
    return static_cast<int>(ord);
}

// Parses disjoint cycle notation with 1-based points, e.g. "(1)(2,7,6,5)(3,4)".
// Points absent from every cycle are fixed.
inline Perm parse_cycles(const std::string& s, int n) {
    Perm p(n);
    size_t i = 0;
    while (i < s.size()) {
        if (std::isspace((unsigned char)s[i])) { ++i; continue; }
        if (s[i] != '(') throw std::invalid_argument("expected '(' in cycle string");
        ++i;
        std::vector<int> cyc;
        std::string num;
        while (i < s.size() && s[i] != ')') {
            if (std::isdigit((unsigned char)s[i])) {
                num += s[i];
            } else if (s[i] == ',' || std::isspace((unsigned char)s[i])) {
                if (!num.empty()) { cyc.push_back(std::stoi(num) - 1); num.clear(); }
            } else {
                throw std::invalid_argument("bad character in cycle string");
            }
            ++i;
        }
        if (i == s.size()) throw std::invalid_argument("unterminated cycle");
        ++i;
        if (!num.empty()) cyc.push_back(std::stoi(num) - 1);
        for (size_t k = 0; k < cyc.size(); ++k) {
            int from = cyc[k], to = cyc[(k + 1) % cyc.size()];
            if (from < 0 || from >= n || to < 0 || to >= n)
                throw std::invalid_argument("cycle point out of range");
            p.img[from] = to;
        }
    }
    return p;
}

inline std::string cycle_string(const Perm& a) {
    std::ostringstream os;
    bool any = false;
    for (auto& c : cycles(a)) {
        if (c.size() == 1) continue;
        any = true;
        os << '(';
        for (size_t k = 0; k < c.size(); ++k) {
            if (k) os << ',';
            os << c[k] + 1;
        }
        os << ')';
    }
    if (!any) return "()";
    return os.str();
}

}  // namespace qdessins
