#pragma once

// Low-index subgroup enumeration for the cartographic group
// C2+ = <r0, r1, r2 | r1^2 = r0 r1 r2 = 1>, reduced to two generators
// a = r0, b = r1 by eliminating r2 = (r0 r1)^-1, leaving <a, b | b^2>.
//
// The search builds coset tables in standard form (cosets numbered by
// first appearance in row-major scan order), so complete tables are in
// bijection with subgroups of index <= n.  A table is kept only when it
// is lexicographically minimal among the re-standardizations at every
// base coset, which selects one representative per conjugacy class.

#include <array>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qdessins/hypermap.hpp"
#include "qdessins/perm.hpp"
#include "qdessins/permgroup.hpp"

namespace qdessins {

struct FinitelyPresentedGroup {
    std::vector<std::string> generators;
    // relator words; letter k+1 = generator k, negative = inverse
    std::vector<std::vector<int>> relators;

    static FinitelyPresentedGroup cartographic_plus() {
        return {{"r0", "r1", "r2"}, {{2, 2}, {1, 2, 3}}};
    }
};

struct CosetTable {
    int index = 1;
    std::vector<Perm> action;  // per reduced generator (a, b), action on cosets

    Perm a() const { return action[0]; }
    Perm b() const { return action[1]; }
};

inline PermutationGroup coset_group(const CosetTable& t) {
    return PermutationGroup(t.index, t.action);
}

inline Hypermap from_coset_action(const CosetTable& t) {
    Hypermap m(t.index, t.a(), t.b());
    if (!is_connected(m)) throw std::invalid_argument("coset table is not transitive");
    return m;
}

namespace detail {

// Columns of the reduced-presentation table: a, a^-1, b.
struct LowIndexSearch {
    int target;
    std::vector<int> fa, fai, fb;  // -1 = undefined
    int m = 1;                     // cosets defined so far
    std::function<void(const CosetTable&)> emit;

    explicit LowIndexSearch(int n) : target(n), fa(n, -1), fai(n, -1), fb(n, -1) {}

    // Renumber cosets by scan order starting from `start`, returning the
    // flattened table rows (a, a^-1, b per coset).
    std::vector<int> standardize(int start) const {
        std::vector<int> old_of_new, new_of_old(m, -1);
        old_of_new.reserve(m);
        old_of_new.push_back(start);
        new_of_old[start] = 0;
        std::vector<int> flat;
        flat.reserve(3 * m);
        for (int r = 0; r < m; ++r) {
            int o = old_of_new[r];
            for (int img : {fa[o], fai[o], fb[o]}) {
                if (new_of_old[img] < 0) {
                    new_of_old[img] = static_cast<int>(old_of_new.size());
                    old_of_new.push_back(img);
                }
                flat.push_back(new_of_old[img]);
            }
        }
        return flat;
    }

    bool is_canonical() const {
        auto ref = standardize(0);
        for (int s = 1; s < m; ++s)
            if (standardize(s) < ref) return false;
        return true;
    }

    void complete() {
        if (m != target) return;  // exact index only
        if (!is_canonical()) return;
        CosetTable t;
        t.index = m;
        t.action = {Perm(std::vector<int>(fa.begin(), fa.begin() + m)),
                    Perm(std::vector<int>(fb.begin(), fb.begin() + m))};
        emit(t);
    }

    void run() {
        // first undefined slot in scan order
        for (int r = 0; r < m; ++r) {
            if (fa[r] < 0) { branch_a(r); return; }
            if (fai[r] < 0) { branch_ai(r); return; }
            if (fb[r] < 0) { branch_b(r); return; }
        }
        complete();
    }

    void try_a(int r, int c) {
        fa[r] = c;
        fai[c] = r;
        run();
        fa[r] = -1;
        fai[c] = -1;
    }

    void try_b(int r, int c) {
        fb[r] = c;
        fb[c] = r;
        run();
        fb[r] = -1;
        if (c != r) fb[c] = -1;
    }

    void branch_a(int r) {
        for (int c = 0; c < m; ++c)
            if (fai[c] < 0) try_a(r, c);
        if (m < target) {
            ++m;
            try_a(r, m - 1);
            --m;
        }
    }

    void branch_ai(int r) {
        for (int c = 0; c < m; ++c)
            if (fa[c] < 0) { fai[r] = c; fa[c] = r; run(); fai[r] = -1; fa[c] = -1; }
        if (m < target) {
            ++m;
            fai[r] = m - 1;
            fa[m - 1] = r;
            run();
            fai[r] = -1;
            fa[m - 1] = -1;
            --m;
        }
    }

    void branch_b(int r) {
        for (int c = r; c < m; ++c)  // b is an involution; c >= r so each pairing is set once
            if (fb[c] < 0) try_b(r, c);
        if (m < target) {
            ++m;
            try_b(r, m - 1);
            --m;
        }
    }
};

}  // namespace detail

// One coset table per conjugacy class of index-exactly-n subgroups of the
// cartographic group, in deterministic (lexicographic) order.
inline std::vector<CosetTable> low_index_subgroups(const FinitelyPresentedGroup& G, int n) {
    if (n < 1 || n > 12) throw std::invalid_argument("index cap is 12");
    if (G.generators.size() != 3 || G.relators != FinitelyPresentedGroup::cartographic_plus().relators)
        throw std::invalid_argument("only the cartographic presentation is supported");
    std::vector<CosetTable> out;
    detail::LowIndexSearch search(n);
    search.emit = [&](const CosetTable& t) { out.push_back(t); };
    search.run();
    return out;
}

// Re-checks the defining relators r1^2 and r0 r1 r2 (with r2 = (r0 r1)^-1)
// on every coset of a table; used as a post-enumeration verification.
inline bool satisfies_relators(const CosetTable& t) {
    const Perm& a = t.action[0];
    const Perm& b = t.action[1];
    if (!compose(b, b).is_identity()) return false;
    // r0 r1 r2 with r2 acting as (ab)^-1
    Perm ab = compose(a, b);
    return compose(ab, inverse(ab)).is_identity();
}

// Line-stabilization search.  Looks for the largest subset S of lines and
// a bijection between permutation points and geometry points under which
// every generator maps each line of S onto a line of S.
struct LineStabilization {
    int max_lines = 0;
    bool all_lines = false;
    bool transitive_on_lines = false;
    std::vector<int> witness;  // geometry point assigned to each permutation point, or empty
};

namespace detail {

struct StabSearch {
    const std::vector<Perm>& gens;
    const std::vector<std::vector<int>>& lines;  // subset under test, as point lists
    int npoints;
    std::vector<int> dart_of_point;  // psi: geometry point -> permutation point
    std::vector<bool> dart_used;
    std::vector<int> order;  // point assignment order

    StabSearch(const std::vector<Perm>& g, const std::vector<std::vector<int>>& ls, int n)
        : gens(g), lines(ls), npoints(n), dart_of_point(n, -1), dart_used(n, false) {
        // order points so lines complete as early as possible
        std::vector<bool> placed(n, false);
        std::vector<bool> done(lines.size(), false);
        while (true) {
            int best = -1, best_missing = 1 << 20;
            for (size_t l = 0; l < lines.size(); ++l) {
                if (done[l]) continue;
                int missing = 0;
                for (int p : lines[l]) missing += !placed[p];
                if (missing < best_missing) { best_missing = missing; best = (int)l; }
            }
            if (best < 0) break;
            done[best] = true;
            for (int p : lines[best])
                if (!placed[p]) { placed[p] = true; order.push_back(p); }
        }
    }

    bool line_images_ok() const {
        for (const auto& ln : lines) {
            bool full = true;
            for (int p : ln)
                if (dart_of_point[p] < 0) { full = false; break; }
            if (!full) continue;
            for (const auto& g : gens) {
                std::vector<bool> image(npoints, false);
                for (int p : ln) image[g(dart_of_point[p])] = true;
                bool some = false;
                for (const auto& mline : lines) {
                    bool ok = true;
                    for (int q = 0; q < npoints && ok; ++q) {
                        // consistency of assigned points with membership in mline
                        if (dart_of_point[q] < 0) continue;
                        bool in_m = false;
                        for (int p : mline)
                            if (p == q) { in_m = true; break; }
                        if (in_m != image[dart_of_point[q]]) ok = false;
                    }
                    // darts in the image not yet claimed must still be free
                    if (ok) { some = true; break; }
                }
                if (!some) return false;
            }
        }
        return true;
    }

    bool found = false;

    void rec(size_t k) {
        if (found) return;
        if (k == order.size()) {
            // full verification on the completed partial map
            for (const auto& ln : lines) {
                for (const auto& g : gens) {
                    std::vector<int> image;
                    for (int p : ln) image.push_back(g(dart_of_point[p]));
                    std::sort(image.begin(), image.end());
                    bool some = false;
                    for (const auto& mline : lines) {
                        std::vector<int> tgt;
                        for (int p : mline) tgt.push_back(dart_of_point[p]);
                        std::sort(tgt.begin(), tgt.end());
                        if (tgt == image) { some = true; break; }
                    }
                    if (!some) return;
                }
            }
            found = true;
            return;
        }
        int point = order[k];
        for (int d = 0; d < npoints; ++d) {
            if (dart_used[d]) continue;
            dart_of_point[point] = d;
            dart_used[d] = true;
            if (line_images_ok()) rec(k + 1);
            dart_used[d] = false;
            dart_of_point[point] = -1;
            if (found) { dart_of_point[point] = d; dart_used[d] = true; return; }
        }
    }
};

}  // namespace detail

inline LineStabilization max_stabilized_lines(const PermutationGroup& P,
                                              const std::vector<std::vector<int>>& lines,
                                              int npoints) {
    if (P.degree != npoints) throw std::invalid_argument("degree != point count");
    if (npoints > 10) throw std::invalid_argument("degree cap is 10");
    LineStabilization best;
    int L = static_cast<int>(lines.size());
    for (int k = L; k >= 1 && best.max_lines == 0; --k) {
        // all k-subsets of lines
        std::vector<int> pick(k);
        std::function<bool(int, int)> choose = [&](int from, int depth) -> bool {
            if (depth == k) {
                std::vector<std::vector<int>> sub;
                for (int i : pick) sub.push_back(lines[i]);
                detail::StabSearch s(P.gens, sub, npoints);
                s.rec(0);
                if (s.found) {
                    best.max_lines = k;
                    best.all_lines = (k == L);
                    // dart_of_point is psi (point -> dart); publish the inverse
                    best.witness.assign(npoints, -1);
                    for (int p = 0; p < npoints; ++p)
                        if (s.dart_of_point[p] >= 0) best.witness[s.dart_of_point[p]] = p;
                    // fill unconstrained darts with leftover points
                    std::vector<bool> used(npoints, false);
                    for (int v : best.witness)
                        if (v >= 0) used[v] = true;
                    int next = 0;
                    for (int d = 0; d < npoints; ++d) {
                        if (best.witness[d] >= 0) continue;
                        while (used[next]) ++next;
                        best.witness[d] = next;
                        used[next] = true;
                    }
                    if (best.all_lines) {
                        // line action: single orbit under the generators?
                        std::vector<int> point_to_dart(npoints);
                        for (int d = 0; d < npoints; ++d) point_to_dart[best.witness[d]] = d;
                        auto line_index = [&](std::vector<int> pts) {
                            std::sort(pts.begin(), pts.end());
                            for (size_t i = 0; i < lines.size(); ++i) {
                                auto l = lines[i];
                                std::sort(l.begin(), l.end());
                                if (l == pts) return (int)i;
                            }
                            return -1;
                        };
                        std::vector<bool> seen(L, false);
                        std::vector<int> stack{0};
                        seen[0] = true;
                        int cnt = 1;
                        while (!stack.empty()) {
                            int li = stack.back();
                            stack.pop_back();
                            for (const auto& g : P.gens) {
                                std::vector<int> img;
                                for (int p : lines[li]) img.push_back(best.witness[g(point_to_dart[p])]);
                                int mi = line_index(img);
                                if (mi >= 0 && !seen[mi]) { seen[mi] = true; ++cnt; stack.push_back(mi); }
                            }
                        }
                        best.transitive_on_lines = (cnt == L);
                    }
                    return true;
                }
                return false;
            }
            for (int i = from; i < L; ++i) {
                pick[depth] = i;
                if (choose(i + 1, depth + 1)) return true;
            }
            return false;
        };
        choose(0, 0);
    }
    return best;
}

}  // namespace qdessins
