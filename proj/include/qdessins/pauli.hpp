#pragma once

// N-qubit Pauli operators in the binary symplectic representation.
//
// Internal normal form: i^phase_exp * X^x * Z^z, where x and z are bit
// strings (bit j = qubit j, leftmost letter of the text form is bit 0)
// and X^x means the tensor product of X on the set bits.  The letter Y
// on qubit j contributes x_j = z_j = 1 and one factor of i, so the
// canonical Hermitian string "XYZ" has phase_exp = popcount(x & z).

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "qdessins/matrix.hpp"

namespace qdessins {

constexpr int kMaxQubits = 8;

struct Pauli {
    int n = 1;
    unsigned phase_exp = 0;  // exponent of i, mod 4
    uint32_t x = 0;
    uint32_t z = 0;

    bool operator==(const Pauli& o) const {
        return n == o.n && phase_exp == o.phase_exp && x == o.x && z == o.z;
    }
    bool is_identity() const { return x == 0 && z == 0 && phase_exp == 0; }

    // Phase relative to the plain letter string: 0,1,2,3 -> +1,+i,-1,-i.
    unsigned sign_code() const {
        return (phase_exp - __builtin_popcount(x & z)) & 3u;
    }
    bool is_hermitian() const { return (sign_code() & 1u) == 0; }

    // Same letters, phase +1.
    Pauli hermitian_canonical() const {
        Pauli p = *this;
        p.phase_exp = __builtin_popcount(x & z) & 3u;
        return p;
    }
    // Projective class key ignoring phase; 0 is the identity class.
    uint64_t projective_code() const {
        return (uint64_t)x | ((uint64_t)z << n);
    }
};

inline void check_same_size(const Pauli& a, const Pauli& b) {
    if (a.n != b.n) throw std::invalid_argument("qubit counts differ");
}

// Symplectic form; 0 means commute, 1 anticommute.
inline bool commutes(const Pauli& a, const Pauli& b) {
    check_same_size(a, b);
    unsigned f = __builtin_popcount(a.x & b.z) + __builtin_popcount(a.z & b.x);
    return (f & 1u) == 0;
}

inline Pauli multiply(const Pauli& a, const Pauli& b) {
    check_same_size(a, b);
    Pauli r;
    r.n = a.n;
    // Z^z1 X^x2 = (-1)^(z1.x2) X^x2 Z^z1
    r.phase_exp = (a.phase_exp + b.phase_exp + 2u * __builtin_popcount(a.z & b.x)) & 3u;
    r.x = a.x ^ b.x;
    r.z = a.z ^ b.z;
    return r;
}

inline Pauli pauli_from_letters(const std::string& letters, unsigned sign_code = 0) {
    if (letters.empty() || letters.size() > kMaxQubits)
        throw std::invalid_argument("need 1..8 Pauli letters");
    Pauli p;
    p.n = static_cast<int>(letters.size());
    for (size_t j = 0; j < letters.size(); ++j) {
        switch (letters[j]) {
            case 'I': break;
            case 'X': p.x |= 1u << j; break;
            case 'Z': p.z |= 1u << j; break;
            case 'Y': p.x |= 1u << j; p.z |= 1u << j; break;
            default: throw std::invalid_argument("bad Pauli letter");
        }
    }
    p.phase_exp = (__builtin_popcount(p.x & p.z) + sign_code) & 3u;
    return p;
}

// Accepts an optional sign prefix: "", "+", "-", "i", "+i", "-i".
inline Pauli pauli_parse(const std::string& s) {
    size_t i = 0;
    unsigned sign = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        neg = s[i] == '-';
        ++i;
    }
    if (i < s.size() && s[i] == 'i') {
        sign = 1;
        ++i;
    }
    if (neg) sign = (sign + 2) & 3u;
    return pauli_from_letters(s.substr(i), sign);
}

inline std::string pauli_to_string(const Pauli& p) {
    static const char* prefix[4] = {"", "i", "-", "-i"};
    std::string out = prefix[p.sign_code()];
    for (int j = 0; j < p.n; ++j) {
        bool xb = (p.x >> j) & 1u, zb = (p.z >> j) & 1u;
        out += xb ? (zb ? 'Y' : 'X') : (zb ? 'Z' : 'I');
    }
    return out;
}

inline Mat to_matrix(const Pauli& p) {
    if (p.n > kMaxQubits) throw std::invalid_argument("qubit cap exceeded");
    static const cplx i1(0, 1);
    Mat m = Mat::identity(1);
    for (int j = 0; j < p.n; ++j) {
        Mat f(2);
        bool xb = (p.x >> j) & 1u, zb = (p.z >> j) & 1u;
        if (!xb && !zb) { f.at(0, 0) = 1; f.at(1, 1) = 1; }
        else if (xb && !zb) { f.at(0, 1) = 1; f.at(1, 0) = 1; }
        else if (!xb) { f.at(0, 0) = 1; f.at(1, 1) = -1; }
        else { f.at(0, 1) = -1; f.at(1, 0) = 1; }  // XZ (= -iY)
        m = kron(m, f);
    }
    cplx ph = 1;
    for (unsigned k = 0; k < p.phase_exp; ++k) ph *= i1;
    return ph * m;
}

// The 4^n - 1 nonidentity projective classes, Hermitian representatives,
// enumerated in a fixed order (by (x, z) code).
inline std::vector<Pauli> projective_observables(int n) {
    if (n < 1 || n > kMaxQubits) throw std::invalid_argument("qubit count out of range");
    std::vector<Pauli> out;
    for (uint32_t code = 1; code < (1u << (2 * n)); ++code) {
        Pauli p;
        p.n = n;
        p.x = code & ((1u << n) - 1);
        p.z = code >> n;
        p.phase_exp = __builtin_popcount(p.x & p.z) & 3u;
        out.push_back(p);
    }
    return out;
}

}  // namespace qdessins
