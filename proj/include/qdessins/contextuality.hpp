#pragma once

// Quantum (in)compatibility configurations over the N-qubit Pauli group:
// Bell-CHSH quadruples and their census, the Mermin magic square, the
// three-qubit pentagram census, Fano heptads, GQ(2,2) verification and
// the exhaustive Kochen-Specker colorability check.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <thread>
#include <vector>

#include "qdessins/matrix.hpp"
#include "qdessins/pauli.hpp"

namespace qdessins {

struct PointLineGeometry {
    std::vector<Pauli> points;           // projective (canonical Hermitian reps)
    std::vector<std::vector<int>> lines;  // point-index subsets
    std::vector<int> signs;               // +1 / -1 per line
};

// Product sign of a mutually commuting line; throws if the product is not
// +-identity or the factors fail to commute.
inline int line_sign(const std::vector<Pauli>& points, const std::vector<int>& line) {
    for (size_t i = 0; i < line.size(); ++i)
        for (size_t j = i + 1; j < line.size(); ++j)
            if (!commutes(points[line[i]], points[line[j]]))
                throw std::invalid_argument("line operators do not mutually commute");
    Pauli prod = points[line[0]].hermitian_canonical();
    for (size_t i = 1; i < line.size(); ++i)
        prod = multiply(prod, points[line[i]].hermitian_canonical());
    if (prod.x != 0 || prod.z != 0)
        throw std::invalid_argument("line product is not +-identity");
    if (prod.phase_exp == 0) return 1;
    if (prod.phase_exp == 2) return -1;
    throw std::logic_error("commuting Hermitian product came out anti-Hermitian");
}

inline void validate_geometry(const PointLineGeometry& g) {
    if (g.lines.size() != g.signs.size())
        throw std::invalid_argument("line/sign count mismatch");
    for (size_t l = 0; l < g.lines.size(); ++l)
        if (line_sign(g.points, g.lines[l]) != g.signs[l])
            throw std::invalid_argument("stored line sign is wrong");
}

// ---------------------------------------------------------------------------
// Bell-CHSH

struct BellQuadruple {
    Pauli s1, s2, s3, s4;

    bool valid() const {
        return !commutes(s1, s3) && !commutes(s2, s4) && commutes(s2, s1) &&
               commutes(s2, s3) && commutes(s4, s1) && commutes(s4, s3);
    }
};

// C = s2(s1+s3) + s4(s3-s1); asserts C^2 = 4 I + [s1,s3][s2,s4] entry-wise.
inline Mat chsh_operator(const BellQuadruple& q) {
    if (!q.valid()) throw std::invalid_argument("quadruple violates the CHSH pattern");
    Mat m1 = to_matrix(q.s1.hermitian_canonical());
    Mat m2 = to_matrix(q.s2.hermitian_canonical());
    Mat m3 = to_matrix(q.s3.hermitian_canonical());
    Mat m4 = to_matrix(q.s4.hermitian_canonical());
    Mat C = m2 * (m1 + m3) + m4 * (m3 - m1);
    Mat comm13 = m1 * m3 - m3 * m1;
    Mat comm24 = m2 * m4 - m4 * m2;
    Mat rhs = cplx(4, 0) * Mat::identity(C.n) + comm13 * comm24;
    if (max_abs_diff(C * C, rhs) > 1e-12)
        throw std::logic_error("C^2 identity failed");
    return C;
}

// Unordered pairs of disjoint anticommuting pairs {{a,c},{b,d}} with each
// of b, d commuting with each of a, c.
inline long bell_census(int n) {
    if (n < 1 || n > 3) throw std::invalid_argument("qubit count out of range");
    auto obs = projective_observables(n);
    int N = static_cast<int>(obs.size());
    std::vector<std::vector<bool>> comm(N, std::vector<bool>(N));
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) comm[i][j] = commutes(obs[i], obs[j]);
    std::vector<std::pair<int, int>> anti;
    for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j)
            if (!comm[i][j]) anti.push_back({i, j});
    long count = 0;
    for (size_t p = 0; p < anti.size(); ++p)
        for (size_t q = p + 1; q < anti.size(); ++q) {
            auto [a, c] = anti[p];
            auto [b, d] = anti[q];
            if (a == b || a == d || c == b || c == d) continue;
            if (comm[b][a] && comm[b][c] && comm[d][a] && comm[d][c]) ++count;
        }
    return count;
}

// The closed-form decomposition behind the census: (number of anticommuting
// pairs) x (anticommuting pairs in a common commutant) / 2.
inline std::pair<long, long> bell_census_decomposition(int n) {
    auto obs = projective_observables(n);
    int N = static_cast<int>(obs.size());
    long anti_pairs = 0;
    for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j)
            if (!commutes(obs[i], obs[j])) ++anti_pairs;
    // commutant pairs for one fixed anticommuting pair (count is the same
    // for all of them by symmetry; asserted against the direct census)
    int a = -1, c = -1;
    for (int i = 0; i < N && a < 0; ++i)
        for (int j = i + 1; j < N; ++j)
            if (!commutes(obs[i], obs[j])) { a = i; c = j; break; }
    long commutant_pairs = 0;
    for (int b = 0; b < N; ++b) {
        if (b == a || b == c || !commutes(obs[b], obs[a]) || !commutes(obs[b], obs[c]))
            continue;
        for (int d = b + 1; d < N; ++d) {
            if (d == a || d == c || !commutes(obs[d], obs[a]) || !commutes(obs[d], obs[c]))
                continue;
            if (!commutes(obs[b], obs[d])) ++commutant_pairs;
        }
    }
    return {anti_pairs, commutant_pairs};
}

// Streams census quadruples (for property tests); stops early when the
// callback returns false.
inline void bell_quadruple_stream(int n, const std::function<bool(const BellQuadruple&)>& cb) {
    auto obs = projective_observables(n);
    int N = static_cast<int>(obs.size());
    for (int a = 0; a < N; ++a)
        for (int c = a + 1; c < N; ++c) {
            if (commutes(obs[a], obs[c])) continue;
            for (int b = 0; b < N; ++b) {
                if (b == a || b == c) continue;
                if (!commutes(obs[b], obs[a]) || !commutes(obs[b], obs[c])) continue;
                for (int d = b + 1; d < N; ++d) {
                    if (d == a || d == c) continue;
                    if (commutes(obs[b], obs[d])) continue;
                    if (!commutes(obs[d], obs[a]) || !commutes(obs[d], obs[c])) continue;
                    if (!cb(BellQuadruple{obs[a], obs[b], obs[c], obs[d]})) return;
                }
            }
        }
}

// ---------------------------------------------------------------------------
// Mermin square, Kochen-Specker, GQ(2,2), Fano heptads

// 3x3 grid of two-qubit observables; rows then columns as lines, with the
// single negative line {XX, YY, ZZ} in the middle column.
inline PointLineGeometry canonical_mermin_square() {
    PointLineGeometry g;
    for (const char* s : {"XI", "XX", "IX", "IZ", "ZZ", "ZI", "XZ", "YY", "ZX"})
        g.points.push_back(pauli_parse(s));
    g.lines = {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}, {0, 3, 6}, {1, 4, 7}, {2, 5, 8}};
    for (const auto& l : g.lines) g.signs.push_back(line_sign(g.points, l));
    return g;
}

struct KSAssignment {
    std::vector<int> values;  // +1 / -1 per point
};

// Exhaustive search over 2^|points| sign assignments; empty result
// certifies a Kochen-Specker contradiction.
inline std::optional<KSAssignment> ks_colorable(const PointLineGeometry& g) {
    size_t p = g.points.size();
    if (p > 24) throw std::invalid_argument("point cap is 24");
    std::vector<uint32_t> line_masks;
    for (const auto& l : g.lines) {
        uint32_t m = 0;
        for (int i : l) m |= 1u << i;
        line_masks.push_back(m);
    }
    for (uint32_t assign = 0; assign < (1u << p); ++assign) {
        bool ok = true;
        for (size_t l = 0; l < line_masks.size() && ok; ++l) {
            int prod = (__builtin_popcount(assign & line_masks[l]) & 1) ? -1 : 1;
            if (prod != g.signs[l]) ok = false;
        }
        if (ok) {
            KSAssignment a;
            for (size_t i = 0; i < p; ++i) a.values.push_back((assign >> i) & 1u ? -1 : 1);
            return a;
        }
    }
    return std::nullopt;
}

struct Gq22Report {
    int points = 0;
    int lines = 0;
    bool three_lines_per_point = false;
    int axiom_violations = 0;
    bool ok = false;
};

// Checks that the 15 two-qubit observables with their 15 commuting triples
// form the generalized quadrangle GQ(2,2).
inline Gq22Report verify_gq22() {
    auto obs = projective_observables(2);
    int N = static_cast<int>(obs.size());
    Gq22Report r;
    r.points = N;
    std::vector<std::array<int, 3>> lines;
    for (int a = 0; a < N; ++a)
        for (int b = a + 1; b < N; ++b) {
            if (!commutes(obs[a], obs[b])) continue;
            Pauli p = multiply(obs[a], obs[b]);
            // locate the projective class of the product
            int c = -1;
            for (int k = 0; k < N; ++k)
                if (obs[k].x == p.x && obs[k].z == p.z) { c = k; break; }
            if (c > b) lines.push_back({a, b, c});
        }
    r.lines = static_cast<int>(lines.size());
    std::vector<int> per_point(N, 0);
    for (auto& l : lines)
        for (int pt : l) ++per_point[pt];
    r.three_lines_per_point =
        std::all_of(per_point.begin(), per_point.end(), [](int k) { return k == 3; });
    // GQ axiom: for each non-incident (point, line), exactly one point of
    // the line is collinear with the point.
    auto collinear = [&](int u, int v) {
        for (auto& l : lines) {
            bool hu = false, hv = false;
            for (int pt : l) { hu |= pt == u; hv |= pt == v; }
            if (hu && hv) return true;
        }
        return false;
    };
    for (int p = 0; p < N; ++p)
        for (auto& l : lines) {
            if (l[0] == p || l[1] == p || l[2] == p) continue;
            int coll = 0;
            for (int q : l) coll += collinear(p, q);
            if (coll != 1) ++r.axiom_violations;
        }
    r.ok = r.lines == 15 && r.three_lines_per_point && r.axiom_violations == 0;
    return r;
}

// All maximal sets of 7 mutually commuting nonidentity three-qubit
// projective observables, each with its 7 Fano lines {a, b, ab}.
inline std::vector<PointLineGeometry> fano_heptads() {
    auto obs = projective_observables(3);
    int N = static_cast<int>(obs.size());
    auto idx_of = [&](const Pauli& p) {
        uint32_t code = p.x | (p.z << 3);
        return static_cast<int>(code) - 1;  // matches enumeration order
    };
    std::vector<std::array<int, 7>> seen;
    for (int a = 0; a < N; ++a)
        for (int b = a + 1; b < N; ++b) {
            if (!commutes(obs[a], obs[b])) continue;
            int ab = idx_of(multiply(obs[a], obs[b]));
            for (int c = b + 1; c < N; ++c) {
                if (c == ab) continue;
                if (!commutes(obs[c], obs[a]) || !commutes(obs[c], obs[b])) continue;
                std::array<int, 7> h = {a,
                                        b,
                                        ab,
                                        c,
                                        idx_of(multiply(obs[a], obs[c])),
                                        idx_of(multiply(obs[b], obs[c])),
                                        idx_of(multiply(multiply(obs[a], obs[b]), obs[c]))};
                std::sort(h.begin(), h.end());
                bool dup = false;
                for (auto& s : seen)
                    if (s == h) { dup = true; break; }
                if (!dup) seen.push_back(h);
            }
        }
    std::sort(seen.begin(), seen.end());
    std::vector<PointLineGeometry> out;
    for (auto& h : seen) {
        PointLineGeometry g;
        std::map<int, int> local;
        for (int i = 0; i < 7; ++i) {
            local[h[i]] = i;
            g.points.push_back(obs[h[i]]);
        }
        for (int i = 0; i < 7; ++i)
            for (int j = i + 1; j < 7; ++j) {
                int k = local.at(idx_of(multiply(obs[h[i]], obs[h[j]])));
                if (k > j) g.lines.push_back({i, j, k});
            }
        for (const auto& l : g.lines) g.signs.push_back(line_sign(g.points, l));
        out.push_back(std::move(g));
    }
    return out;
}

// Projective plane axioms (any two lines meet in one point, any two points
// lie on one line, and a proper quadrangle exists).
inline bool satisfies_projective_plane_axioms(const PointLineGeometry& g) {
    int n = static_cast<int>(g.points.size());
    for (size_t i = 0; i < g.lines.size(); ++i)
        for (size_t j = i + 1; j < g.lines.size(); ++j) {
            int meet = 0;
            for (int p : g.lines[i])
                for (int q : g.lines[j]) meet += p == q;
            if (meet != 1) return false;
        }
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q) {
            int through = 0;
            for (const auto& l : g.lines) {
                bool hp = false, hq = false;
                for (int x : l) { hp |= x == p; hq |= x == q; }
                through += hp && hq;
            }
            if (through != 1) return false;
        }
    if (n < 4) return false;
    // four points, no three collinear
    auto collinear3 = [&](int a, int b, int c) {
        for (const auto& l : g.lines) {
            int hit = 0;
            for (int x : l) hit += (x == a) + (x == b) + (x == c);
            if (hit == 3) return true;
        }
        return false;
    };
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d)
                    if (!collinear3(a, b, c) && !collinear3(a, b, d) &&
                        !collinear3(a, c, d) && !collinear3(b, c, d))
                        return true;
    return false;
}

// ---------------------------------------------------------------------------
// Pentagram census

struct PentagramLine {
    std::array<int, 4> points;  // indices into projective_observables(n)
    int sign = 1;
    uint64_t mask = 0;
};

// All 4-subsets of mutually commuting observables with product +-identity.
inline std::vector<PentagramLine> good_lines(int n) {
    auto obs = projective_observables(n);
    int N = static_cast<int>(obs.size());
    auto idx_of = [&](uint32_t x, uint32_t z) {
        return static_cast<int>(x | (z << n)) - 1;
    };
    std::vector<PentagramLine> out;
    for (int a = 0; a < N; ++a)
        for (int b = a + 1; b < N; ++b) {
            if (!commutes(obs[a], obs[b])) continue;
            for (int c = b + 1; c < N; ++c) {
                if (!commutes(obs[c], obs[a]) || !commutes(obs[c], obs[b])) continue;
                uint32_t dx = obs[a].x ^ obs[b].x ^ obs[c].x;
                uint32_t dz = obs[a].z ^ obs[b].z ^ obs[c].z;
                if (dx == 0 && dz == 0) continue;  // product of the three is identity
                int d = idx_of(dx, dz);
                if (d <= c) continue;  // canonical ordering; also kills duplicates
                // product a*b*c*d has trivial symplectic part by construction;
                // commutation of d with a, b follows, with c needs a check
                if (!commutes(obs[d], obs[c]) || !commutes(obs[d], obs[a]) ||
                    !commutes(obs[d], obs[b]))
                    continue;
                PentagramLine l;
                l.points = {a, b, c, d};
                l.sign = line_sign(obs, {a, b, c, d});
                for (int p : l.points) l.mask |= 1ull << p;
                out.push_back(l);
            }
        }
    return out;
}

struct PentagramCensus {
    long count = 0;
    std::vector<std::array<int, 5>> pentagrams;  // line indices, canonical order
    std::vector<PentagramLine> lines;
    std::map<int, long> negative_line_histogram;  // #negative lines -> count
};

// Exhaustive pentagram search: 5 good lines, every two sharing exactly one
// point, 10 points total, odd number of negative lines.  The root level
// (choice of the first line) can be partitioned across workers.
inline PentagramCensus pentagram_census(int n = 3, int workers = 1, bool keep_stream = true) {
    PentagramCensus census;
    census.lines = good_lines(n);
    int L = static_cast<int>(census.lines.size());
    std::vector<std::vector<int>> compat(L);  // j > i with |intersection| = 1
    for (int i = 0; i < L; ++i)
        for (int j = i + 1; j < L; ++j)
            if (__builtin_popcountll(census.lines[i].mask & census.lines[j].mask) == 1)
                compat[i].push_back(j);

    auto search_from = [&](int first, std::vector<std::array<int, 5>>& found) {
        std::array<int, 5> pick{};
        pick[0] = first;
        std::function<void(int, uint64_t)> rec = [&](int depth, uint64_t used) {
            if (depth == 5) {
                if (__builtin_popcountll(used) != 10) return;
                int neg = 0;
                for (int i : pick) neg += census.lines[i].sign < 0;
                if (neg % 2 == 1) found.push_back(pick);
                return;
            }
            for (int j : compat[pick[depth - 1]]) {
                bool ok = true;
                for (int k = 0; k + 1 < depth && ok; ++k)
                    ok = j > pick[k] &&
                         __builtin_popcountll(census.lines[j].mask & census.lines[pick[k]].mask) == 1;
                if (!ok) continue;
                // no point may land on three lines
                uint64_t mj = census.lines[j].mask;
                bool deg_ok = true;
                for (int k = 0; k < depth && deg_ok; ++k) {
                    uint64_t mk = census.lines[pick[k]].mask;
                    for (int k2 = k + 1; k2 < depth && deg_ok; ++k2)
                        if (mj & mk & census.lines[pick[k2]].mask) deg_ok = false;
                }
                if (!deg_ok) continue;
                pick[depth] = j;
                rec(depth + 1, used | mj);
            }
        };
        rec(1, census.lines[first].mask);
    };

    if (workers <= 1) {
        std::vector<std::array<int, 5>> found;
        for (int first = 0; first < L; ++first) search_from(first, found);
        census.pentagrams = std::move(found);
    } else {
        std::vector<std::vector<std::array<int, 5>>> parts(workers);
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                for (int first = w; first < L; first += workers) search_from(first, parts[w]);
            });
        for (auto& t : pool) t.join();
        for (auto& p : parts)
            census.pentagrams.insert(census.pentagrams.end(), p.begin(), p.end());
        std::sort(census.pentagrams.begin(), census.pentagrams.end());
    }
    census.count = static_cast<long>(census.pentagrams.size());
    for (const auto& p : census.pentagrams) {
        int neg = 0;
        for (int i : p) neg += census.lines[i].sign < 0;
        ++census.negative_line_histogram[neg];
    }
    if (!keep_stream) census.pentagrams.clear();
    return census;
}

// Materializes one census pentagram as a geometry on its 10 points.
inline PointLineGeometry pentagram_geometry(const PentagramCensus& census,
                                            const std::array<int, 5>& pent, int n = 3) {
    auto obs = projective_observables(n);
    std::vector<int> pts;
    for (int li : pent)
        for (int p : census.lines[li].points) pts.push_back(p);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    PointLineGeometry g;
    std::map<int, int> local;
    for (size_t i = 0; i < pts.size(); ++i) {
        local[pts[i]] = static_cast<int>(i);
        g.points.push_back(obs[pts[i]]);
    }
    for (int li : pent) {
        std::vector<int> line;
        for (int p : census.lines[li].points) line.push_back(local.at(p));
        std::sort(line.begin(), line.end());
        g.lines.push_back(line);
        g.signs.push_back(census.lines[li].sign);
    }
    return g;
}

}  // namespace qdessins
