#pragma once

// Small dense complex matrices plus a cyclic-Jacobi Hermitian eigensolver.
// Everything here targets dimensions <= 256; no external linear algebra.

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

namespace qdessins {

using cplx = std::complex<double>;

struct Mat {
    int n = 0;
    std::vector<cplx> a;  // row-major

    Mat() = default;
    explicit Mat(int dim) : n(dim), a(static_cast<size_t>(dim) * dim, cplx(0, 0)) {}

    cplx& at(int r, int c) { return a[static_cast<size_t>(r) * n + c]; }
    const cplx& at(int r, int c) const { return a[static_cast<size_t>(r) * n + c]; }

    static Mat identity(int dim) {
        Mat m(dim);
        for (int i = 0; i < dim; ++i) m.at(i, i) = 1;
        return m;
    }
};

inline Mat operator+(const Mat& x, const Mat& y) {
    if (x.n != y.n) throw std::invalid_argument("matrix size mismatch");
    Mat r(x.n);
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = x.a[i] + y.a[i];
    return r;
}

inline Mat operator-(const Mat& x, const Mat& y) {
    if (x.n != y.n) throw std::invalid_argument("matrix size mismatch");
    Mat r(x.n);
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = x.a[i] - y.a[i];
    return r;
}

inline Mat operator*(const cplx& s, const Mat& x) {
    Mat r = x;
    for (auto& v : r.a) v *= s;
    return r;
}

inline Mat operator*(const Mat& x, const Mat& y) {
    if (x.n != y.n) throw std::invalid_argument("matrix size mismatch");
    Mat r(x.n);
    for (int i = 0; i < x.n; ++i)
        for (int k = 0; k < x.n; ++k) {
            cplx v = x.at(i, k);
            if (v == cplx(0, 0)) continue;
            for (int j = 0; j < x.n; ++j) r.at(i, j) += v * y.at(k, j);
        }
    return r;
}

inline Mat dagger(const Mat& x) {
    Mat r(x.n);
    for (int i = 0; i < x.n; ++i)
        for (int j = 0; j < x.n; ++j) r.at(i, j) = std::conj(x.at(j, i));
    return r;
}

inline Mat kron(const Mat& x, const Mat& y) {
    Mat r(x.n * y.n);
    for (int i = 0; i < x.n; ++i)
        for (int j = 0; j < x.n; ++j) {
            cplx v = x.at(i, j);
            if (v == cplx(0, 0)) continue;
            for (int k = 0; k < y.n; ++k)
                for (int l = 0; l < y.n; ++l)
                    r.at(i * y.n + k, j * y.n + l) = v * y.at(k, l);
        }
    return r;
}

inline double max_abs_diff(const Mat& x, const Mat& y) {
    if (x.n != y.n) throw std::invalid_argument("matrix size mismatch");
    double m = 0;
    for (size_t i = 0; i < x.a.size(); ++i) m = std::max(m, std::abs(x.a[i] - y.a[i]));
    return m;
}

inline bool approx_equal(const Mat& x, const Mat& y, double tol = 1e-12) {
    return x.n == y.n && max_abs_diff(x, y) <= tol;
}

inline bool is_hermitian(const Mat& x, double tol = 1e-12) {
    for (int i = 0; i < x.n; ++i)
        for (int j = i; j < x.n; ++j)
            if (std::abs(x.at(i, j) - std::conj(x.at(j, i))) > tol) return false;
    return true;
}

namespace detail {

// Cyclic Jacobi on a real symmetric matrix; returns eigenvalues ascending.
inline std::vector<double> jacobi_symmetric(std::vector<double> s, int n) {
    auto el = [&](int i, int j) -> double& { return s[static_cast<size_t>(i) * n + j]; };
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += el(i, j) * el(i, j);
        if (off < 1e-26) break;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                double apq = el(p, q);
                if (std::abs(apq) < 1e-300) continue;
                double theta = (el(q, q) - el(p, p)) / (2 * apq);
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1));
                double c = 1 / std::sqrt(t * t + 1), sn = t * c;
                for (int k = 0; k < n; ++k) {
                    double akp = el(k, p), akq = el(k, q);
                    el(k, p) = c * akp - sn * akq;
                    el(k, q) = sn * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    double apk = el(p, k), aqk = el(q, k);
                    el(p, k) = c * apk - sn * aqk;
                    el(q, k) = sn * apk + c * aqk;
                }
            }
    }
    std::vector<double> ev(n);
    for (int i = 0; i < n; ++i) ev[i] = el(i, i);
    std::sort(ev.begin(), ev.end());
    return ev;
}

}  // namespace detail

// Eigenvalues of a Hermitian matrix, ascending with multiplicity.
// Works on the real symmetric embedding [[Re, -Im], [Im, Re]], whose
// spectrum is that of the input with every eigenvalue doubled.
inline std::vector<double> hermitian_eigenvalues(const Mat& m, double herm_tol = 1e-12) {
    if (!is_hermitian(m, herm_tol)) throw std::invalid_argument("matrix is not Hermitian");
    int n = m.n;
    std::vector<double> s(static_cast<size_t>(2 * n) * (2 * n), 0.0);
    auto put = [&](int i, int j, double v) { s[static_cast<size_t>(i) * 2 * n + j] = v; };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            put(i, j, m.at(i, j).real());
            put(i, j + n, -m.at(i, j).imag());
            put(i + n, j, m.at(i, j).imag());
            put(i + n, j + n, m.at(i, j).real());
        }
    auto ev = detail::jacobi_symmetric(std::move(s), 2 * n);
    std::vector<double> out(n);
    for (int i = 0; i < n; ++i) out[i] = (ev[2 * i] + ev[2 * i + 1]) / 2;
    return out;
}

// Largest singular value.
inline double operator_norm(const Mat& m) {
    Mat g = dagger(m) * m;
    // round off tiny asymmetries from the product before the solve
    for (int i = 0; i < g.n; ++i)
        for (int j = i; j < g.n; ++j) {
            cplx v = (g.at(i, j) + std::conj(g.at(j, i))) / 2.0;
            g.at(i, j) = v;
            g.at(j, i) = std::conj(v);
        }
    auto ev = hermitian_eigenvalues(g, 1e-9);
    double top = ev.empty() ? 0 : ev.back();
    return std::sqrt(std::max(0.0, top));
}

}  // namespace qdessins
