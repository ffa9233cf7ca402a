#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <qdessins/belyi.hpp>
#include <qdessins/hypermap.hpp>

#include <complex>

using namespace qdessins;
using C = std::complex<double>;

namespace {

Hypermap fano_hypermap() {
    return Hypermap{7, parse_cycles("(1)(2,7,6,5)(3,4)", 7), parse_cycles("(1,2)(3,5)", 7)};
}

Hypermap bell_hypermap() {
    return Hypermap{8, parse_cycles("(1,8)(2,3)(4,5)(6,7)", 8),
                    parse_cycles("(1,2)(3,4)(5,6)(7,8)", 8)};
}

}  // namespace

TEST_CASE("roots of z^2 - 1") {
    auto roots = polynomial_roots({C(-1), C(0), C(1)});
    REQUIRE(roots.size() == 2);
    CHECK(std::abs(roots[0].value - C(-1)) < 1e-9);
    CHECK(std::abs(roots[1].value - C(1)) < 1e-9);
    CHECK(roots[0].multiplicity == 1);
    CHECK(roots[1].multiplicity == 1);
}

TEST_CASE("roots of the degree-7 map numerator") {
    auto f = fano_belyi_map();
    auto roots = polynomial_roots(f.num);
    REQUIRE(roots.size() == 3);
    C a = default_map_constants().at("a");
    // sorted by (re, im): a, then 0, then 1
    CHECK(std::abs(roots[0].value - a) < 1e-7);
    CHECK(roots[0].multiplicity == 1);
    CHECK(std::abs(roots[1].value) < 1e-7);
    CHECK(roots[1].multiplicity == 4);
    CHECK(std::abs(roots[2].value - C(1)) < 1e-7);
    CHECK(roots[2].multiplicity == 2);
}

TEST_CASE("roots of (z^4 - 1)^2 are four double roots at roots of unity") {
    Poly p = poly::power({C(-1), C(0), C(0), C(0), C(1)}, 2);
    auto roots = polynomial_roots(p);
    REQUIRE(roots.size() == 4);
    for (const auto& r : roots) {
        CHECK(r.multiplicity == 2);
        CHECK(std::abs(std::abs(r.value) - 1.0) < 1e-7);
        CHECK(std::abs(std::pow(r.value, 4) - C(1)) < 1e-6);
    }
}

TEST_CASE("multiplicities are stable under tolerance halving") {
    for (const auto& f : {fano_belyi_map(), klein_belyi_map()}) {
        for (const Poly& p : {f.num, f.den, poly::sub(f.num, f.den)}) {
            if (poly::degree(poly::trim(p)) < 1) continue;
            auto coarse = polynomial_roots(p, 1e-8);
            auto fine = polynomial_roots(p, 5e-9);
            REQUIRE(coarse.size() == fine.size());
            for (size_t i = 0; i < coarse.size(); ++i) {
                CHECK(coarse[i].multiplicity == fine[i].multiplicity);
                CHECK(std::abs(coarse[i].value - fine[i].value) < 1e-6);
            }
        }
    }
}

TEST_CASE("degree cap") {
    Poly big(34, C(1));
    CHECK_THROWS_AS(polynomial_roots(big), std::invalid_argument);
}

TEST_CASE("critical values of the two reference maps are within {0,1,inf}") {
    CHECK(critical_values_within_belyi_set(fano_belyi_map()));
    CHECK(critical_values_within_belyi_set(klein_belyi_map()));
}

TEST_CASE("critical values of z^2 are 0 and infinity") {
    ComplexRationalMap f;
    f.num = {C(0), C(0), C(1)};
    f.den = {C(1)};
    auto vals = critical_values(f);
    bool zero = false, inf = false, other = false;
    for (const auto& v : vals) {
        if (v.infinite)
            inf = true;
        else if (std::abs(v.value) < 1e-9)
            zero = true;
        else
            other = true;
    }
    CHECK(zero);
    CHECK(inf);
    CHECK(!other);
    CHECK(critical_values_within_belyi_set(f));
}

TEST_CASE("ramification passports of the reference maps") {
    auto fano = ramification_passport(fano_belyi_map());
    CHECK(fano.over0 == std::vector<int>{4, 2, 1});
    CHECK(fano.over1 == std::vector<int>{2, 2, 1, 1, 1});
    CHECK(fano.overInf == std::vector<int>{7});

    auto klein = ramification_passport(klein_belyi_map());
    CHECK(klein.over0 == std::vector<int>{2, 2, 2, 2});
    CHECK(klein.over1 == std::vector<int>{2, 2, 2, 2});
    CHECK(klein.overInf == std::vector<int>{4, 4});
}

TEST_CASE("z^n passport is ([n], [1,...,1], [n])") {
    for (int n = 1; n <= 8; ++n) {
        ComplexRationalMap f;
        f.num.assign(n + 1, C(0));
        f.num[n] = C(1);
        f.den = {C(1)};
        auto pp = ramification_passport(f);
        CHECK(pp.over0 == std::vector<int>{n});
        CHECK(pp.over1 == std::vector<int>(n, 1));
        CHECK(pp.overInf == std::vector<int>{n});
    }
}

TEST_CASE("matches_dessin pairs maps with figures") {
    CHECK(matches_dessin(fano_belyi_map(), fano_hypermap()));
    CHECK(matches_dessin(klein_belyi_map(), bell_hypermap()));
    // degree mismatch: 8 != 7
    CHECK(!matches_dessin(klein_belyi_map(), fano_hypermap()));
    CHECK(!matches_dessin(fano_belyi_map(), bell_hypermap()));
}

TEST_CASE("conjugate constant gives the mirror dessin with the same passport") {
    auto mirror = rescaled_to_belyi(parse_map("z^4*(z-1)^2*(z-abar)"));
    CHECK(critical_values_within_belyi_set(mirror));
    CHECK(matches_dessin(mirror, fano_hypermap()));
    CHECK(ramification_passport(mirror) == ramification_passport(fano_belyi_map()));
}

TEST_CASE("degree-7 normalization constant is (49 + 13 i sqrt 7)/7^4") {
    auto raw = parse_map("z^4*(z-1)^2*(z-a)");
    auto f = rescaled_to_belyi(raw);
    // num is untouched, den picks up the critical value
    REQUIRE(poly::degree(poly::trim(f.den)) == 0);
    C c = f.den[0] / raw.den[0];
    C expect(49.0 / 2401.0, 13.0 * std::sqrt(7.0) / 2401.0);
    CHECK(std::abs(c - expect) < 1e-9);
    // rescaling an already-Belyi map is a no-op up to 1e-6
    auto k = rescaled_to_belyi(klein_belyi_map());
    CHECK(ramification_passport(k) == ramification_passport(klein_belyi_map()));
}

TEST_CASE("Riemann-Hurwitz consistency at genus 0") {
    CHECK(riemann_hurwitz_consistent(fano_belyi_map(), 0));
    CHECK(riemann_hurwitz_consistent(klein_belyi_map(), 0));
    CHECK(!riemann_hurwitz_consistent(fano_belyi_map(), 1));
}

TEST_CASE("passport is invariant under common rescaling") {
    for (C s : {C(3, 0), C(0, 2), C(-0.5, 1.5)}) {
        auto f = klein_belyi_map();
        ComplexRationalMap g;
        g.num = poly::scale(f.num, s);
        g.den = poly::scale(f.den, s);
        CHECK(ramification_passport(g) == ramification_passport(f));
    }
}

TEST_CASE("numerator and denominator sharing a root is rejected") {
    ComplexRationalMap f;
    // (z-1) z^2 over (z-1)
    f.num = poly::mul({C(-1), C(1)}, {C(0), C(0), C(1)});
    f.den = {C(-1), C(1)};
    CHECK_THROWS_AS(check_no_common_roots(f), std::invalid_argument);
    CHECK_NOTHROW(check_no_common_roots(klein_belyi_map()));
}

TEST_CASE("map expression parser") {
    // implicit multiplication and unary minus
    auto f = parse_map("-4z^4");
    REQUIRE(poly::degree(f.num) == 4);
    CHECK(std::abs(f.num[4] - C(-4)) < 1e-12);
    CHECK(poly::degree(poly::trim(f.den)) == 0);

    auto g = parse_map("(z-1)(z+1)");
    CHECK(std::abs(poly::eval(g.num, C(2)) - C(3)) < 1e-12);

    auto h = parse_map("i*z^2 + 0.5");
    CHECK(std::abs(h.num[2] - C(0, 1)) < 1e-12);
    CHECK(std::abs(h.num[0] - C(0.5)) < 1e-12);

    // division builds a rational map
    auto k = parse_map("z^2/(z-1)");
    CHECK(poly::degree(poly::trim(k.num)) == 2);
    CHECK(poly::degree(poly::trim(k.den)) == 1);

    CHECK_THROWS_AS(parse_map("z^2 +"), std::invalid_argument);
    CHECK_THROWS_AS(parse_map("q"), std::invalid_argument);
    CHECK_THROWS_AS(parse_map("z^2) extra"), std::invalid_argument);
}

TEST_CASE("map evaluation sanity: Klein map sends 4th roots of unity to 0") {
    auto f = klein_belyi_map();
    for (C z : {C(1), C(-1), C(0, 1), C(0, -1)}) {
        C v = poly::eval(f.num, z) / poly::eval(f.den, z);
        CHECK(std::abs(v) < 1e-12);
    }
    // and (z^4+1) roots to 1
    C z = std::polar(1.0, M_PI / 4);
    C v = poly::eval(f.num, z) / poly::eval(f.den, z);
    CHECK(std::abs(v - C(1)) < 1e-12);
}
