#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "qdessins/matrix.hpp"
#include "qdessins/pauli.hpp"

using namespace qdessins;

namespace {

// dense commutator oracle, independent of the symplectic path
bool matrices_commute(const Pauli& a, const Pauli& b) {
    Mat ma = to_matrix(a), mb = to_matrix(b);
    return max_abs_diff(ma * mb, mb * ma) < 1e-12;
}

Pauli random_pauli(std::mt19937& rng, int n) {
    std::uniform_int_distribution<uint32_t> bits(0, (1u << n) - 1);
    std::uniform_int_distribution<unsigned> ph(0, 3);
    Pauli p;
    p.n = n;
    p.x = bits(rng);
    p.z = bits(rng);
    p.phase_exp = ph(rng);
    return p;
}

}  // namespace

TEST_CASE("parser and printer round-trip canonical forms") {
    for (const char* s : {"IX", "-ZZ", "iY", "XYZ", "I", "-iXX", "YY", "ZI"}) {
        Pauli p = pauli_parse(s);
        CHECK(pauli_to_string(p) == s);
        CHECK(pauli_parse(pauli_to_string(p)) == p);
    }
    CHECK(pauli_to_string(pauli_parse("+X")) == "X");
    CHECK(pauli_to_string(pauli_parse("+iZ")) == "iZ");
    CHECK_THROWS(pauli_parse("XQ"));
    CHECK_THROWS(pauli_parse(""));
}

TEST_CASE("commutation: stated examples") {
    CHECK(commutes(pauli_parse("IX"), pauli_parse("XI")));
    CHECK_FALSE(commutes(pauli_parse("IX"), pauli_parse("IZ")));
    CHECK(commutes(pauli_parse("XX"), pauli_parse("YY")));  // frozen from the dense oracle
    CHECK(matrices_commute(pauli_parse("XX"), pauli_parse("YY")));
    CHECK_THROWS(commutes(pauli_parse("X"), pauli_parse("XX")));
}

TEST_CASE("commutation agrees with the dense commutator") {
    // exhaustive for n <= 2
    for (int n = 1; n <= 2; ++n) {
        auto obs = projective_observables(n);
        for (size_t i = 0; i < obs.size(); ++i)
            for (size_t j = i; j < obs.size(); ++j)
                CHECK(commutes(obs[i], obs[j]) == matrices_commute(obs[i], obs[j]));
    }
    // randomized for n = 3
    std::mt19937 rng(42);
    for (int t = 0; t < 1000; ++t) {
        Pauli a = random_pauli(rng, 3), b = random_pauli(rng, 3);
        CHECK(commutes(a, b) == matrices_commute(a, b));
    }
}

TEST_CASE("multiplication: stated examples") {
    CHECK(multiply(pauli_parse("IX"), pauli_parse("XI")) == pauli_parse("XX"));
    CHECK(multiply(pauli_parse("X"), pauli_parse("Y")) == pauli_parse("iZ"));
    CHECK(multiply(pauli_parse("XX"), pauli_parse("YY")) == pauli_parse("-ZZ"));
    CHECK_THROWS(multiply(pauli_parse("X"), pauli_parse("XX")));
}

TEST_CASE("multiplication is associative and matrix-exact") {
    std::mt19937 rng(7);
    for (int t = 0; t < 500; ++t) {
        int n = 1 + (t % 3);
        Pauli a = random_pauli(rng, n), b = random_pauli(rng, n), c = random_pauli(rng, n);
        CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
        CHECK(approx_equal(to_matrix(multiply(a, b)), to_matrix(a) * to_matrix(b), 1e-12));
    }
}

TEST_CASE("round trip through the dense matrix") {
    std::mt19937 rng(13);
    for (int t = 0; t < 50; ++t) {
        Pauli a = random_pauli(rng, 2);
        // recover (phase, x, z) by probing against all candidates
        Mat m = to_matrix(a);
        int hits = 0;
        for (uint32_t x = 0; x < 4; ++x)
            for (uint32_t z = 0; z < 4; ++z)
                for (unsigned e = 0; e < 4; ++e) {
                    Pauli cand{2, e, x, z};
                    if (approx_equal(to_matrix(cand), m, 1e-12)) {
                        ++hits;
                        CHECK(cand == a);
                    }
                }
        CHECK(hits == 1);
    }
}

TEST_CASE("to_matrix: stated examples") {
    CHECK(approx_equal(to_matrix(pauli_parse("I")), Mat::identity(2)));
    Mat z(2);
    z.at(0, 0) = 1;
    z.at(1, 1) = -1;
    CHECK(approx_equal(to_matrix(pauli_parse("Z")), z));
    Mat xx(4);
    xx.at(0, 3) = xx.at(1, 2) = xx.at(2, 1) = xx.at(3, 0) = 1;
    CHECK(approx_equal(to_matrix(pauli_parse("XX")), xx));
}

TEST_CASE("nonidentity observables square to the identity after normalization") {
    for (int n = 1; n <= 3; ++n)
        for (const auto& p : projective_observables(n)) {
            Pauli sq = multiply(p.hermitian_canonical(), p.hermitian_canonical());
            CHECK(sq.is_identity());
        }
}

TEST_CASE("commutant sizes per projective observable") {
    for (int n : {2, 3}) {
        auto obs = projective_observables(n);
        int expect_comm = n == 2 ? 6 : 30;
        int expect_anti = n == 2 ? 8 : 32;
        for (const auto& a : obs) {
            int comm = 0, anti = 0;
            for (const auto& b : obs) {
                if (a.projective_code() == b.projective_code()) continue;
                (commutes(a, b) ? comm : anti)++;
            }
            CHECK(comm == expect_comm);
            CHECK(anti == expect_anti);
        }
    }
}

TEST_CASE("hermitian eigensolver on small fixed spectra") {
    auto ev = hermitian_eigenvalues(Mat::identity(4));
    for (double v : ev) CHECK(v == doctest::Approx(1.0).epsilon(1e-9));
    auto evz = hermitian_eigenvalues(to_matrix(pauli_parse("Z")));
    CHECK(evz[0] == doctest::Approx(-1.0).epsilon(1e-9));
    CHECK(evz[1] == doctest::Approx(1.0).epsilon(1e-9));
    Mat bad(2);
    bad.at(0, 1) = 1;  // not Hermitian
    CHECK_THROWS(hermitian_eigenvalues(bad));
}

TEST_CASE("operator norm basics") {
    CHECK(operator_norm(Mat::identity(4)) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(operator_norm(cplx(2, 0) * Mat::identity(4)) == doctest::Approx(2.0).epsilon(1e-9));
    // non-Hermitian input: largest singular value of a nilpotent Jordan block
    Mat jb(2);
    jb.at(0, 1) = 3;
    CHECK(operator_norm(jb) == doctest::Approx(3.0).epsilon(1e-9));
}
