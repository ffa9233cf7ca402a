#pragma once

// Numerical Belyi-map verification: Durand-Kerner root finding with
// multiplicity clustering, critical values of complex rational maps,
// ramification passports, and a small expression parser for map literals
// like "z^4*(z-1)^2*(z-a)".

#include <cmath>
#include <complex>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qdessins/hypermap.hpp"

namespace qdessins {

using Poly = std::vector<std::complex<double>>;  // coefficients, ascending

namespace poly {

using C = std::complex<double>;

inline Poly trim(Poly p, double eps = 1e-12) {
    double scale = 0;
    for (auto& c : p) scale = std::max(scale, std::abs(c));
    while (p.size() > 1 && std::abs(p.back()) <= eps * std::max(1.0, scale)) p.pop_back();
    return p;
}

inline int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

inline C eval(const Poly& p, C z) {
    C r = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * z + *it;
    return r;
}

inline Poly add(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), C(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return trim(std::move(r));
}

inline Poly sub(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), C(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return trim(std::move(r));
}

inline Poly mul(const Poly& a, const Poly& b) {
    Poly r(a.size() + b.size() - 1, C(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return trim(std::move(r));
}

inline Poly scale(const Poly& a, C s) {
    Poly r = a;
    for (auto& c : r) c *= s;
    return trim(std::move(r));
}

inline Poly derivative(const Poly& a) {
    if (a.size() <= 1) return {C(0)};
    Poly r(a.size() - 1);
    for (size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * C(double(i));
    return trim(std::move(r));
}

inline Poly power(Poly a, int e) {
    Poly r{C(1)};
    while (e > 0) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

}  // namespace poly

struct RootCluster {
    std::complex<double> value;
    int multiplicity;
};

// Simultaneous (Durand-Kerner) iteration followed by multiplicity
// clustering.  Clusters are polished with multiplicity-aware Newton steps
// so the final cluster radius is far below `cluster_radius`.
inline std::vector<RootCluster> polynomial_roots(const Poly& input, double tol = 1e-10,
                                                 double cluster_radius = 1e-4) {
    Poly p = poly::trim(input);
    int d = poly::degree(p);
    if (d > 32) throw std::invalid_argument("degree cap is 32");
    if (d <= 0) return {};
    // monic normalization
    std::complex<double> lead = p.back();
    for (auto& c : p) c /= lead;

    std::vector<std::complex<double>> z(d);
    const std::complex<double> seed(0.4, 0.9);  // standard non-real seed
    std::complex<double> acc(1, 0);
    for (int k = 0; k < d; ++k) {
        acc *= seed;
        z[k] = acc;
    }
    for (int iter = 0; iter < 1000; ++iter) {
        double shift = 0;
        for (int k = 0; k < d; ++k) {
            std::complex<double> denom(1, 0);
            for (int j = 0; j < d; ++j)
                if (j != k) denom *= z[k] - z[j];
            std::complex<double> delta = poly::eval(p, z[k]) / denom;
            z[k] -= delta;
            shift = std::max(shift, std::abs(delta));
        }
        if (shift < 1e-13) break;
    }

    // coarse single-linkage clustering
    double coarse = 20 * cluster_radius;
    std::vector<int> cluster(d, -1);
    int nclusters = 0;
    for (int k = 0; k < d; ++k) {
        if (cluster[k] >= 0) continue;
        cluster[k] = nclusters;
        bool grew = true;
        while (grew) {
            grew = false;
            for (int i = 0; i < d; ++i)
                if (cluster[i] == nclusters)
                    for (int j = 0; j < d; ++j)
                        if (cluster[j] < 0 && std::abs(z[i] - z[j]) < coarse) {
                            cluster[j] = nclusters;
                            grew = true;
                        }
        }
        ++nclusters;
    }

    Poly dp = poly::derivative(p);
    std::vector<RootCluster> out;
    for (int c = 0; c < nclusters; ++c) {
        std::complex<double> center(0, 0);
        int m = 0;
        for (int k = 0; k < d; ++k)
            if (cluster[k] == c) { center += z[k]; ++m; }
        center /= double(m);
        // modified Newton: quadratic at a root of multiplicity m
        for (int it = 0; it < 100; ++it) {
            std::complex<double> f = poly::eval(p, center), df = poly::eval(dp, center);
            if (std::abs(df) == 0) break;
            std::complex<double> delta = double(m) * f / df;
            center -= delta;
            if (std::abs(delta) < 1e-15 * std::max(1.0, std::abs(center))) break;
        }
        if (std::abs(poly::eval(p, center)) > tol * std::max(1.0, std::pow(std::abs(center), d)))
            throw std::runtime_error("root refinement did not reach the residual target");
        out.push_back({center, m});
    }
    // final merge at the requested radius (polished centers of a true
    // multiple root coincide to ~1e-12, distinct roots stay far apart)
    for (size_t i = 0; i < out.size(); ++i)
        for (size_t j = i + 1; j < out.size();) {
            if (std::abs(out[i].value - out[j].value) < cluster_radius) {
                out[i].multiplicity += out[j].multiplicity;
                out.erase(out.begin() + j);
            } else {
                ++j;
            }
        }
    std::sort(out.begin(), out.end(), [](const RootCluster& a, const RootCluster& b) {
        if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
        return a.value.imag() < b.value.imag();
    });
    return out;
}

struct ComplexRationalMap {
    Poly num{std::complex<double>(0)};
    Poly den{std::complex<double>(1)};

    int degree() const {
        return std::max(poly::degree(poly::trim(num)), poly::degree(poly::trim(den)));
    }
};

inline void check_no_common_roots(const ComplexRationalMap& f) {
    if (poly::degree(poly::trim(f.num)) < 1 || poly::degree(poly::trim(f.den)) < 1) return;
    auto rn = polynomial_roots(f.num);
    auto rd = polynomial_roots(f.den);
    for (auto& a : rn)
        for (auto& b : rd)
            if (std::abs(a.value - b.value) <= 1e-6)
                throw std::invalid_argument("numerator and denominator share a root");
}

// A point of the Riemann sphere: finite value or infinity.
struct SphereValue {
    bool infinite = false;
    std::complex<double> value{0, 0};
};

inline SphereValue snap_sphere_value(std::complex<double> v, double tol = 1e-6) {
    if (std::abs(v) > 1e6) return {true, {}};
    if (std::abs(v) < tol) return {false, {0, 0}};
    if (std::abs(v - std::complex<double>(1, 0)) < tol) return {false, {1, 0}};
    return {false, v};
}

// Images of the finite critical points (roots of num' den - num den'),
// plus the value at infinity when infinity ramifies.
inline std::vector<SphereValue> critical_values(const ComplexRationalMap& f) {
    check_no_common_roots(f);
    Poly n = poly::trim(f.num), d = poly::trim(f.den);
    Poly wronskian =
        poly::sub(poly::mul(poly::derivative(n), d), poly::mul(n, poly::derivative(d)));
    std::vector<SphereValue> out;
    auto push_unique = [&](SphereValue v) {
        for (auto& w : out) {
            if (w.infinite && v.infinite) return;
            if (!w.infinite && !v.infinite && std::abs(w.value - v.value) < 1e-6) return;
        }
        out.push_back(v);
    };
    if (poly::degree(wronskian) >= 1) {
        for (auto& r : polynomial_roots(wronskian)) {
            std::complex<double> dv = poly::eval(d, r.value);
            if (std::abs(dv) < 1e-9) {
                push_unique({true, {}});
            } else {
                push_unique(snap_sphere_value(poly::eval(n, r.value) / dv));
            }
        }
    }
    // ramification at infinity
    int dn = poly::degree(n), dd = poly::degree(d);
    if (dn - dd >= 2) push_unique({true, {}});
    if (dd - dn >= 2) push_unique({false, {0, 0}});
    if (dn == dd) {
        std::complex<double> vinf = n.back() / d.back();
        int drop = dn - poly::degree(poly::sub(n, poly::scale(d, vinf)));
        if (drop >= 2) push_unique(snap_sphere_value(vinf));
    }
    return out;
}

// Divides the map by its common nonzero finite critical value, sending that
// value to 1.  Maps stated in the literature up to a scalar become honest
// Belyi maps this way; a map whose nonzero finite critical values disagree
// cannot be rescaled and is rejected.
inline ComplexRationalMap rescaled_to_belyi(ComplexRationalMap f, double tol = 1e-6) {
    std::complex<double> c(0, 0);
    bool have = false;
    for (auto& v : critical_values(f)) {
        if (v.infinite || std::abs(v.value) < tol) continue;
        if (have && std::abs(v.value - c) > tol)
            throw std::invalid_argument("distinct nonzero finite critical values");
        c = v.value;
        have = true;
    }
    if (have) f.den = poly::scale(f.den, c);
    return f;
}

inline bool critical_values_within_belyi_set(const ComplexRationalMap& f, double tol = 1e-6) {
    for (auto& v : critical_values(f)) {
        if (v.infinite) continue;
        if (std::abs(v.value) > tol && std::abs(v.value - std::complex<double>(1, 0)) > tol)
            return false;
    }
    return true;
}

struct RamificationPassport {
    std::vector<int> over0, over1, overInf;  // descending partitions of the degree
    bool operator==(const RamificationPassport& o) const {
        return over0 == o.over0 && over1 == o.over1 && overInf == o.overInf;
    }
};

inline RamificationPassport ramification_passport(const ComplexRationalMap& f) {
    Poly n = poly::trim(f.num), d = poly::trim(f.den);
    int deg = f.degree();
    auto fiber = [&](const Poly& p) {
        std::vector<int> part;
        if (poly::degree(p) >= 1)
            for (auto& r : polynomial_roots(p)) part.push_back(r.multiplicity);
        int at_inf = deg - poly::degree(p);
        if (at_inf > 0) part.push_back(at_inf);
        std::sort(part.rbegin(), part.rend());
        int sum = 0;
        for (int m : part) sum += m;
        if (sum != deg) throw std::logic_error("fiber multiplicities do not sum to the degree");
        return part;
    };
    RamificationPassport pp;
    pp.over0 = fiber(n);
    pp.overInf = fiber(d);
    pp.over1 = fiber(poly::sub(n, d));
    return pp;
}

inline bool matches_dessin(const ComplexRationalMap& f, const Hypermap& m) {
    if (f.degree() != m.n) return false;
    RamificationPassport rp = ramification_passport(f);
    Passport hp = passport(m);
    return rp.over0 == hp.lambda0 && rp.over1 == hp.lambda1 && rp.overInf == hp.lambdaInf;
}

// Riemann-Hurwitz: sum over the three fibers of (degree - #preimages)
// must equal 2 degree - 2 + 2 genus.
inline bool riemann_hurwitz_consistent(const ComplexRationalMap& f, int genus) {
    RamificationPassport pp = ramification_passport(f);
    int deg = f.degree();
    long lhs = 0;
    for (auto* fib : {&pp.over0, &pp.over1, &pp.overInf})
        lhs += deg - static_cast<long>(fib->size());
    return lhs == 2L * deg - 2 + 2L * genus;
}

// ---------------------------------------------------------------------------
// Expression parser: +, -, *, /, ^ (integer), parentheses, implicit
// multiplication ("4z^4"), the variable z, the imaginary unit i, decimal
// literals and named constants.

namespace detail {

struct MapParser {
    const std::string& src;
    size_t pos = 0;
    const std::map<std::string, std::complex<double>>& consts;

    void skip() {
        while (pos < src.size() && std::isspace((unsigned char)src[pos])) ++pos;
    }
    bool starts_base() {
        skip();
        if (pos >= src.size()) return false;
        char c = src[pos];
        return std::isalnum((unsigned char)c) || c == '(' || c == '.';
    }

    ComplexRationalMap parse_expr() {
        skip();
        bool neg = false;
        if (pos < src.size() && (src[pos] == '+' || src[pos] == '-')) {
            neg = src[pos] == '-';
            ++pos;
        }
        ComplexRationalMap acc = parse_term();
        if (neg) acc.num = poly::scale(acc.num, -1);
        while (true) {
            skip();
            if (pos < src.size() && (src[pos] == '+' || src[pos] == '-')) {
                bool minus = src[pos] == '-';
                ++pos;
                ComplexRationalMap rhs = parse_term();
                Poly num = minus ? poly::sub(poly::mul(acc.num, rhs.den), poly::mul(rhs.num, acc.den))
                                 : poly::add(poly::mul(acc.num, rhs.den), poly::mul(rhs.num, acc.den));
                acc = {num, poly::mul(acc.den, rhs.den)};
            } else {
                return acc;
            }
        }
    }

    ComplexRationalMap parse_term() {
        ComplexRationalMap acc = parse_factor();
        while (true) {
            skip();
            if (pos < src.size() && src[pos] == '*') {
                ++pos;
                ComplexRationalMap rhs = parse_factor();
                acc = {poly::mul(acc.num, rhs.num), poly::mul(acc.den, rhs.den)};
            } else if (pos < src.size() && src[pos] == '/') {
                ++pos;
                ComplexRationalMap rhs = parse_factor();
                acc = {poly::mul(acc.num, rhs.den), poly::mul(acc.den, rhs.num)};
            } else if (starts_base()) {  // implicit multiplication
                ComplexRationalMap rhs = parse_factor();
                acc = {poly::mul(acc.num, rhs.num), poly::mul(acc.den, rhs.den)};
            } else {
                return acc;
            }
        }
    }

    ComplexRationalMap parse_factor() {
        skip();
        bool neg = false;
        while (pos < src.size() && (src[pos] == '+' || src[pos] == '-')) {
            if (src[pos] == '-') neg = !neg;
            ++pos;
            skip();
        }
        ComplexRationalMap base = parse_base();
        skip();
        if (pos < src.size() && src[pos] == '^') {
            ++pos;
            skip();
            size_t start = pos;
            while (pos < src.size() && std::isdigit((unsigned char)src[pos])) ++pos;
            if (start == pos) throw std::invalid_argument("expected integer exponent");
            int e = std::stoi(src.substr(start, pos - start));
            base = {poly::power(base.num, e), poly::power(base.den, e)};
        }
        if (neg) base.num = poly::scale(base.num, -1);
        return base;
    }

    ComplexRationalMap parse_base() {
        skip();
        if (pos >= src.size()) throw std::invalid_argument("unexpected end of expression");
        char c = src[pos];
        if (c == '(') {
            ++pos;
            ComplexRationalMap e = parse_expr();
            skip();
            if (pos >= src.size() || src[pos] != ')')
                throw std::invalid_argument("missing ')'");
            ++pos;
            return e;
        }
        if (std::isdigit((unsigned char)c) || c == '.') {
            size_t start = pos;
            while (pos < src.size() &&
                   (std::isdigit((unsigned char)src[pos]) || src[pos] == '.'))
                ++pos;
            double v = std::stod(src.substr(start, pos - start));
            return {{std::complex<double>(v, 0)}, {std::complex<double>(1, 0)}};
        }
        if (std::isalpha((unsigned char)c)) {
            size_t start = pos;
            while (pos < src.size() && std::isalnum((unsigned char)src[pos])) ++pos;
            std::string name = src.substr(start, pos - start);
            if (name == "z") return {{{0, 0}, {1, 0}}, {std::complex<double>(1, 0)}};
            if (name == "i") return {{std::complex<double>(0, 1)}, {std::complex<double>(1, 0)}};
            auto it = consts.find(name);
            if (it == consts.end()) throw std::invalid_argument("unknown constant: " + name);
            return {{it->second}, {std::complex<double>(1, 0)}};
        }
        throw std::invalid_argument(std::string("unexpected character '") + c + "'");
    }
};

}  // namespace detail

inline std::map<std::string, std::complex<double>> default_map_constants() {
    return {{"a", std::complex<double>(-0.25, -std::sqrt(7.0) / 4.0)},
            {"abar", std::complex<double>(-0.25, std::sqrt(7.0) / 4.0)}};
}

inline ComplexRationalMap parse_map(const std::string& expr,
                                    const std::map<std::string, std::complex<double>>& consts =
                                        default_map_constants()) {
    detail::MapParser p{expr, 0, consts};
    ComplexRationalMap m = p.parse_expr();
    p.skip();
    if (p.pos != expr.size()) throw std::invalid_argument("trailing input in map expression");
    m.num = poly::trim(m.num);
    m.den = poly::trim(m.den);
    return m;
}

// The two explicit maps under study: degree 7 for the Fano dessin and
// Klein's degree-8 map for the Bell square.  The degree-7 polynomial is
// stated in the literature up to a scalar; its two simple critical points
// share the value (49 + 13i*sqrt(7))/7^4, so the rescale makes it Belyi.
inline ComplexRationalMap fano_belyi_map() {
    return rescaled_to_belyi(parse_map("z^4*(z-1)^2*(z-a)"));
}
inline ComplexRationalMap klein_belyi_map() { return parse_map("(z^4-1)^2/(-4z^4)"); }

}  // namespace qdessins
