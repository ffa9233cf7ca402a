#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "qdessins/hypermap.hpp"
#include "qdessins/io.hpp"
#include "qdessins/permgroup.hpp"

using namespace qdessins;

namespace {

// Figure data used across the suite.
Hypermap fano_map() {
    return Hypermap(7, parse_cycles("(1)(2,7,6,5)(3,4)", 7), parse_cycles("(1,2)(3,5)", 7));
}
Hypermap bell_map() {
    return Hypermap(8, parse_cycles("(1,8)(2,3)(4,5)(6,7)", 8),
                    parse_cycles("(1,2)(3,4)(5,6)(7,8)", 8));
}
Hypermap square_map() {
    return Hypermap(9, parse_cycles("(3,9,6,5,2,7)(1,8,4)", 9),
                    parse_cycles("(2,5)(4,7)(6,8)", 9));
}

}  // namespace

TEST_CASE("genus of the three figure maps") {
    Passport p = passport(fano_map());
    CHECK(p.lambda0.size() == 3);   // B
    CHECK(p.lambda1.size() == 5);   // W
    CHECK(p.lambdaInf.size() == 1); // F
    CHECK(genus(fano_map()) == 0);

    Passport q = passport(square_map());
    CHECK(q.lambda0.size() == 2);
    CHECK(q.lambda1.size() == 6);
    CHECK(q.lambdaInf.size() == 3);
    CHECK(genus(square_map()) == 0);

    Hypermap trivial(1, Perm(1), Perm(1));
    Passport t = passport(trivial);
    CHECK(t.lambda0 == std::vector<int>{1});
    CHECK(t.lambda1 == std::vector<int>{1});
    CHECK(t.lambdaInf == std::vector<int>{1});
    CHECK(genus(trivial) == 0);
}

TEST_CASE("passports of the figure maps") {
    CHECK(passport(fano_map()) ==
          Passport{{4, 2, 1}, {2, 2, 1, 1, 1}, {7}});
    CHECK(passport(bell_map()) ==
          Passport{{2, 2, 2, 2}, {2, 2, 2, 2}, {4, 4}});
}

TEST_CASE("connectivity") {
    CHECK(is_connected(fano_map()));
    CHECK(is_connected(bell_map()));
    CHECK(is_connected(square_map()));
    // disjoint union of two 1-edge maps
    Hypermap disjoint(2, Perm(2), Perm(2));
    CHECK_FALSE(is_connected(disjoint));
    CHECK_THROWS(passport(disjoint));
}

TEST_CASE("euler parity and relabeling invariance") {
    std::mt19937 rng(99);
    for (const Hypermap& m : {fano_map(), bell_map(), square_map()}) {
        Passport p = passport(m);
        auto sum = [](const std::vector<int>& v) {
            int s = 0;
            for (int x : v) s += x;
            return s;
        };
        CHECK(sum(p.lambda0) == m.n);
        CHECK(sum(p.lambda1) == m.n);
        CHECK(sum(p.lambdaInf) == m.n);
        int bwfn = static_cast<int>(p.lambda0.size() + p.lambda1.size() + p.lambdaInf.size()) - m.n;
        CHECK((bwfn % 2 + 2) % 2 == 0);

        int g0 = genus(m);
        for (int t = 0; t < 100; ++t) {
            std::vector<int> relab(m.n);
            std::iota(relab.begin(), relab.end(), 0);
            std::shuffle(relab.begin(), relab.end(), rng);
            Perm r(relab);
            Hypermap conj(m.n, conjugate(m.alpha, r), conjugate(m.beta, r));
            CHECK(genus(conj) == g0);
            CHECK(passport(conj) == p);
        }
    }
}

TEST_CASE("the Bell map's permutation group is dihedral of order 8") {
    Hypermap m = bell_map();
    PermutationGroup P(8, {m.alpha, m.beta});
    CHECK(group_order(P) == 8);
    // dihedral: generated by two involutions whose product has order 4
    CHECK(element_order(m.alpha) == 2);
    CHECK(element_order(m.beta) == 2);
    CHECK(element_order(compose(m.alpha, m.beta)) == 4);
    // not elementary abelian: some product fails to commute
    CHECK_FALSE(compose(m.alpha, m.beta) == compose(m.beta, m.alpha));
}

TEST_CASE("hypermap JSON round-trip and DOT emission") {
    Hypermap m = fano_map();
    json j = hypermap_to_json(m);
    Hypermap back = hypermap_from_json(j);
    CHECK(back.n == m.n);
    CHECK(back.alpha == m.alpha);
    CHECK(back.beta == m.beta);
    std::string dot = hypermap_to_dot(m);
    CHECK(dot.find("graph") == 0);
    CHECK(dot.find("b0 --") != std::string::npos);
}
