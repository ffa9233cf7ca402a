#pragma once

// Finite permutation groups: order via a Schreier-Sims stabilizer chain,
// element enumeration, simplicity and isomorphism tests.  Degrees stay
// small (<= 16) throughout; isomorphism is capped at order 1000.

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "qdessins/perm.hpp"

namespace qdessins {

struct PermutationGroup {
    int degree = 1;
    std::vector<Perm> gens;

    PermutationGroup() = default;
    PermutationGroup(int deg, std::vector<Perm> generators)
        : degree(deg), gens(std::move(generators)) {
        for (auto& g : gens)
            if (g.degree() != degree) throw std::invalid_argument("generator degree mismatch");
        std::erase_if(gens, [](const Perm& g) { return g.is_identity(); });
    }
};

namespace detail {

// Deterministic Schreier-Sims with a flat strong-generator list.  Level i
// of the chain uses the strong generators fixing base[0..i-1] pointwise.
struct StabChain {
    int degree;
    std::vector<int> base;
    std::vector<Perm> strong;
    std::vector<std::unordered_map<int, Perm>> trans;  // per level: point -> rep

    explicit StabChain(const PermutationGroup& G) : degree(G.degree) {
        for (const auto& g : G.gens) add(g);
        complete();
    }

    bool fixes_prefix(const Perm& g, size_t levels) const {
        for (size_t i = 0; i < levels; ++i)
            if (g(base[i]) != base[i]) return false;
        return true;
    }

    void add(const Perm& g) {
        if (g.is_identity()) return;
        // make sure some base point distinguishes g from the identity
        if (fixes_prefix(g, base.size())) {
            for (int i = 0; i < degree; ++i)
                if (g(i) != i) { base.push_back(i); break; }
        }
        strong.push_back(g);
    }

    void rebuild() {
        trans.assign(base.size(), {});
        for (size_t lvl = 0; lvl < base.size(); ++lvl) {
            std::vector<const Perm*> gens;
            for (const auto& s : strong)
                if (fixes_prefix(s, lvl)) gens.push_back(&s);
            auto& t = trans[lvl];
            t.emplace(base[lvl], Perm(degree));
            std::vector<int> queue{base[lvl]};
            while (!queue.empty()) {
                int pt = queue.back();
                queue.pop_back();
                Perm rep = t.at(pt);
                for (const Perm* g : gens) {
                    int to = (*g)(pt);
                    if (!t.count(to)) {
                        t.emplace(to, compose(rep, *g));
                        queue.push_back(to);
                    }
                }
            }
        }
    }

    // Strips g starting at `level`; returns residue (identity iff g is in
    // the chain from that level).
    Perm strip(Perm g, size_t level) const {
        for (size_t i = level; i < base.size(); ++i) {
            int image = g(base[i]);
            auto it = trans[i].find(image);
            if (it == trans[i].end()) return g;
            g = compose(g, inverse(it->second));
        }
        return g;
    }

    void complete() {
        rebuild();
        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (size_t lvl = 0; lvl < base.size() && !dirty; ++lvl) {
                std::vector<const Perm*> gens;
                for (const auto& s : strong)
                    if (fixes_prefix(s, lvl)) gens.push_back(&s);
                for (const auto& [pt, rep] : trans[lvl]) {
                    for (const Perm* g : gens) {
                        Perm schreier =
                            compose(compose(rep, *g), inverse(trans[lvl].at((*g)(pt))));
                        Perm res = strip(std::move(schreier), lvl);
                        if (!res.is_identity()) {
                            add(res);
                            rebuild();
                            dirty = true;
                            break;
                        }
                    }
                    if (dirty) break;
                }
            }
        }
    }

    uint64_t order() const {
        uint64_t o = 1;
        for (const auto& t : trans) o *= t.size();
        return o;
    }
};

}  // namespace detail

inline uint64_t group_order(const PermutationGroup& G) {
    if (G.degree > 16) throw std::invalid_argument("degree cap exceeded");
    return detail::StabChain(G).order();
}

// All elements via breadth-first closure; throws if the cap is exceeded.
inline std::vector<Perm> group_elements(const PermutationGroup& G, size_t cap = 20000) {
    std::set<Perm> seen{Perm(G.degree)};
    std::vector<Perm> queue{Perm(G.degree)};
    while (!queue.empty()) {
        Perm e = queue.back();
        queue.pop_back();
        for (const auto& g : G.gens) {
            Perm f = compose(e, g);
            if (seen.insert(f).second) {
                if (seen.size() > cap) throw std::runtime_error("group order cap exceeded");
                queue.push_back(f);
            }
        }
    }
    return {seen.begin(), seen.end()};
}

inline bool is_transitive(const PermutationGroup& G) {
    std::vector<bool> seen(G.degree, false);
    seen[0] = true;
    std::vector<int> stack{0};
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (const auto& g : G.gens)
            for (int w : {g(v), inverse(g)(v)})
                if (!seen[w]) { seen[w] = true; ++count; stack.push_back(w); }
    }
    return count == G.degree;
}

namespace detail {

// Subgroup generated by `gens` inside a known element universe.
inline std::set<Perm> subgroup_closure(const std::vector<Perm>& gens, int degree) {
    std::set<Perm> seen{Perm(degree)};
    std::vector<Perm> queue{Perm(degree)};
    while (!queue.empty()) {
        Perm e = queue.back();
        queue.pop_back();
        for (const auto& g : gens) {
            Perm f = compose(e, g);
            if (seen.insert(f).second) queue.push_back(f);
        }
    }
    return seen;
}

}  // namespace detail

// Normal-closure sweep: simple iff no nonidentity element generates a
// proper normal subgroup.
inline bool is_simple(const PermutationGroup& G, size_t order_cap = 10000) {
    auto elements = group_elements(G, order_cap);
    size_t n = elements.size();
    if (n == 1) return false;
    std::set<Perm> handled;
    for (const auto& e : elements) {
        if (e.is_identity() || handled.count(e)) continue;
        // conjugation closure of {e} under the generators
        std::set<Perm> conj{e};
        std::vector<Perm> queue{e};
        while (!queue.empty()) {
            Perm cur = queue.back();
            queue.pop_back();
            for (const auto& g : G.gens) {
                Perm c = conjugate(cur, g);
                if (conj.insert(c).second) queue.push_back(c);
            }
        }
        auto closure = detail::subgroup_closure({conj.begin(), conj.end()}, G.degree);
        if (closure.size() < n && closure.size() > 1) return false;
        for (const auto& c : conj) handled.insert(c);
    }
    return true;
}

namespace detail {

inline std::map<int, int> order_histogram(const std::vector<Perm>& elems) {
    std::map<int, int> h;
    for (const auto& e : elems) ++h[element_order(e)];
    return h;
}

inline size_t center_size(const std::vector<Perm>& elems) {
    size_t c = 0;
    for (const auto& e : elems) {
        bool central = true;
        for (const auto& f : elems)
            if (!(compose(e, f) == compose(f, e))) { central = false; break; }
        if (central) ++c;
    }
    return c;
}

// Tries to extend generator images into an isomorphism by closing the
// word map; fails on any homomorphism or injectivity violation.
inline bool closes_to_isomorphism(const std::vector<Perm>& p_gens,
                                  const std::vector<Perm>& q_images,
                                  const std::set<Perm>& q_elems, size_t order) {
    std::map<Perm, Perm> phi;
    Perm idp(p_gens[0].degree()), idq(q_images[0].degree());
    phi.emplace(idp, idq);
    std::set<Perm> image{idq};
    std::vector<Perm> queue{idp};
    while (!queue.empty()) {
        Perm p = queue.back();
        queue.pop_back();
        Perm q = phi.at(p);
        for (size_t i = 0; i < p_gens.size(); ++i) {
            Perm pn = compose(p, p_gens[i]);
            Perm qn = compose(q, q_images[i]);
            auto it = phi.find(pn);
            if (it != phi.end()) {
                if (!(it->second == qn)) return false;
            } else {
                if (!q_elems.count(qn) || !image.insert(qn).second) return false;
                phi.emplace(pn, qn);
                queue.push_back(pn);
            }
        }
    }
    return phi.size() == order;
}

}  // namespace detail

// Exact isomorphism test by backtracking over generator images, pruned by
// order, element-order histogram and center size.  Orders must be <= 1000.
inline bool is_isomorphic(const PermutationGroup& P, const PermutationGroup& Q) {
    auto pe = group_elements(P, 1000);
    auto qe = group_elements(Q, 1000);
    if (pe.size() != qe.size()) return false;
    if (pe.size() == 1) return true;
    if (detail::order_histogram(pe) != detail::order_histogram(qe)) return false;
    if (detail::center_size(pe) != detail::center_size(qe)) return false;

    // non-redundant generating set of P
    std::vector<Perm> p_gens;
    size_t reached = 1;
    for (const auto& g : P.gens) {
        if (reached == pe.size()) break;
        auto with = p_gens;
        with.push_back(g);
        size_t sz = detail::subgroup_closure(with, P.degree).size();
        if (sz > reached) { p_gens = std::move(with); reached = sz; }
    }
    if (reached != pe.size()) throw std::logic_error("generator reduction lost elements");

    std::set<Perm> q_set(qe.begin(), qe.end());
    std::vector<int> p_orders;
    for (auto& g : p_gens) p_orders.push_back(element_order(g));

    std::vector<Perm> images(p_gens.size(), Perm(Q.degree));
    std::function<bool(size_t)> rec = [&](size_t k) -> bool {
        if (k == p_gens.size())
            return detail::closes_to_isomorphism(p_gens, images, q_set, pe.size());
        for (const auto& cand : qe) {
            if (element_order(cand) != p_orders[k]) continue;
            images[k] = cand;
            if (rec(k + 1)) return true;
        }
        return false;
    };
    return rec(0);
}

}  // namespace qdessins
