#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <qdessins/contextuality.hpp>
#include <qdessins/graphs.hpp>

#include <cmath>
#include <random>

using namespace qdessins;

TEST_CASE("Petersen construction") {
    auto p = petersen();
    CHECK(p.n == 10);
    CHECK(p.edge_count() == 15);
    CHECK(is_regular(p));
    for (int v = 0; v < p.n; ++v) CHECK(p.degree(v) == 3);
}

TEST_CASE("pentagram graph is the 6-regular complement") {
    auto g = pentagram_graph();
    CHECK(g.n == 10);
    CHECK(g.edge_count() == 30);
    for (int v = 0; v < g.n; ++v) CHECK(g.degree(v) == 6);
}

TEST_CASE("Petersen has no 3-edge-coloring but a 4-edge-coloring") {
    auto p = petersen();
    CHECK(!edge_coloring(p, 3).has_value());
    auto four = edge_coloring(p, 4);
    REQUIRE(four.has_value());
    // proper: adjacent edges differ (re-verify the witness independently)
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < p.n; ++u)
        for (int v = u + 1; v < p.n; ++v)
            if (p.has_edge(u, v)) edges.push_back({u, v});
    REQUIRE(four->size() == edges.size());
    for (size_t i = 0; i < edges.size(); ++i)
        for (size_t j = i + 1; j < edges.size(); ++j) {
            auto [a, b] = edges[i];
            auto [c, d] = edges[j];
            if (a == c || a == d || b == c || b == d) CHECK((*four)[i] != (*four)[j]);
        }
}

TEST_CASE("independence numbers") {
    CHECK(independence_number(petersen()) == 4);
    CHECK(independence_number(pentagram_graph()) == 2);
    CHECK(independence_number(complete_graph(5)) == 1);
    // witness is genuinely independent
    auto w = max_independent_set(petersen());
    REQUIRE(w.size == 4);
    for (size_t i = 0; i < w.witness.size(); ++i)
        for (size_t j = i + 1; j < w.witness.size(); ++j)
            CHECK(!petersen().has_edge(w.witness[i], w.witness[j]));
}

TEST_CASE("clique and chromatic numbers") {
    CHECK(clique_and_chromatic(petersen()) == std::pair<int, int>(2, 3));
    CHECK(clique_and_chromatic(complete_graph(3)) == std::pair<int, int>(3, 3));
    CHECK(clique_and_chromatic(pentagram_graph()) == std::pair<int, int>(4, 5));
    CHECK(clique_number(pentagram_graph()) == independence_number(petersen()));
}

TEST_CASE("strong product") {
    auto c5 = cycle_graph(5);
    auto sq = strong_product(c5, c5);
    CHECK(sq.n == 25);
    CHECK(independence_number(sq) == 5);

    // alpha(G x H) >= alpha(G) alpha(H) on a few pairs
    for (const auto& [g, h] : {std::pair{petersen(), cycle_graph(5)},
                               std::pair{cycle_graph(5), complete_graph(3)},
                               std::pair{pentagram_graph(), cycle_graph(4)}}) {
        auto prod = strong_product(g, h);
        CHECK(prod.n == g.n * h.n);
        CHECK(independence_number(prod) >= independence_number(g) * independence_number(h));
    }
}

TEST_CASE("pentagram graph square admits a 5-point independent set") {
    auto g = pentagram_graph();
    auto sq = strong_product(g, g);
    auto best = max_independent_set(sq);
    CHECK(best.size >= 5);
    for (size_t i = 0; i < best.witness.size(); ++i)
        for (size_t j = i + 1; j < best.witness.size(); ++j)
            CHECK(!sq.has_edge(best.witness[i], best.witness[j]));
}

TEST_CASE("Lovasz theta by the spectral formula") {
    CHECK(lovasz_theta_edge_transitive(cycle_graph(5)) == doctest::Approx(std::sqrt(5.0)).epsilon(1e-9));
    CHECK(lovasz_theta_edge_transitive(petersen()) == doctest::Approx(4.0).epsilon(1e-9));
    double tp = lovasz_theta_edge_transitive(pentagram_graph());
    CHECK(tp == doctest::Approx(2.5).epsilon(1e-9));
    CHECK(tp >= 2.0);  // inside the stated bracket [2, 3]
    CHECK(tp <= 3.0);
}

TEST_CASE("theta refuses non-edge-transitive input") {
    // path P3 is not regular
    SmallGraph p3(3);
    p3.add_edge(0, 1);
    p3.add_edge(1, 2);
    CHECK_THROWS_AS(lovasz_theta_edge_transitive(p3), std::invalid_argument);
}

TEST_CASE("spectra behind the theta values") {
    auto spec_of = [](const SmallGraph& g) {
        auto s = adjacency_spectrum(g);
        std::sort(s.begin(), s.end());
        return s;
    };
    auto sp = spec_of(petersen());
    CHECK(sp.front() == doctest::Approx(-2.0).epsilon(1e-8));
    CHECK(sp.back() == doctest::Approx(3.0).epsilon(1e-8));
    auto sg = spec_of(pentagram_graph());
    CHECK(sg.front() == doctest::Approx(-2.0).epsilon(1e-8));
    CHECK(sg.back() == doctest::Approx(6.0).epsilon(1e-8));
    int minus2 = 0, plus1 = 0;
    for (double x : sg) {
        minus2 += std::abs(x + 2) < 1e-6;
        plus1 += std::abs(x - 1) < 1e-6;
    }
    CHECK(minus2 == 5);
    CHECK(plus1 == 4);
}

TEST_CASE("capacity reports") {
    auto rp = capacity_report(pentagram_graph());
    CHECK(rp.alpha == 2);
    CHECK(rp.alpha_square >= 5);
    CHECK(rp.shannon_lower >= std::sqrt(5.0) - 1e-9);
    REQUIRE(rp.theta.has_value());
    CHECK(*rp.theta == doctest::Approx(2.5).epsilon(1e-9));
    CHECK(rp.shannon_lower <= *rp.shannon_upper + 1e-9);
    // sandwich on the complement: omega(P) <= theta(pentagram) <= chi(P)
    CHECK(rp.complement_omega <= *rp.theta + 1e-9);
    CHECK(*rp.theta <= rp.complement_chi + 1e-9);

    auto rpet = capacity_report(petersen());
    CHECK(rpet.alpha == 4);
    REQUIRE(rpet.theta.has_value());
    CHECK(*rpet.theta == doctest::Approx(4.0).epsilon(1e-9));
    // sandwich closes: Shannon capacity of Petersen is exactly 4
    CHECK(rpet.shannon_lower == doctest::Approx(4.0).epsilon(1e-9));
    CHECK(*rpet.shannon_upper == doctest::Approx(4.0).epsilon(1e-9));

    auto rk = capacity_report(complete_graph(4));
    CHECK(rk.alpha == 1);
    CHECK(rk.alpha_square == 1);
    CHECK(rk.shannon_lower == doctest::Approx(1.0));
    CHECK(*rk.theta == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("theta product inequality for Petersen") {
    double a = lovasz_theta_edge_transitive(petersen());
    double b = lovasz_theta_edge_transitive(pentagram_graph());
    CHECK(a * b == doctest::Approx(10.0).epsilon(1e-9));
}

TEST_CASE("sandwich omega <= theta(complement) <= chi for Petersen and C5") {
    for (const auto& g : {petersen(), cycle_graph(5)}) {
        auto [omega, chi] = clique_and_chromatic(g);
        double th = lovasz_theta_edge_transitive(complement(g));
        CHECK(omega <= th + 1e-9);
        CHECK(th <= chi + 1e-9);
    }
}

TEST_CASE("census pentagram commutation graphs are the Petersen complement") {
    auto census = pentagram_census(3, 4, true);
    auto target = pentagram_graph();
    std::mt19937 rng(42);
    for (int t = 0; t < 100; ++t) {
        const auto& pent = census.pentagrams[rng() % census.pentagrams.size()];
        auto geo = pentagram_geometry(census, pent);
        auto cg = commutation_graph(geo.points);
        CHECK(graphs_isomorphic(cg, target));
    }
    // and a negative control
    CHECK(!graphs_isomorphic(petersen(), target));
}

TEST_CASE("graph isomorphism basics") {
    CHECK(graphs_isomorphic(cycle_graph(5), complement(cycle_graph(5))));  // C5 self-complementary
    CHECK(!graphs_isomorphic(cycle_graph(6), complement(cycle_graph(6))));
    // relabeled Petersen
    auto p = petersen();
    SmallGraph q(10);
    std::vector<int> perm = {3, 1, 4, 0, 9, 2, 6, 8, 7, 5};
    for (int u = 0; u < 10; ++u)
        for (int v = u + 1; v < 10; ++v)
            if (p.has_edge(u, v)) q.add_edge(perm[u], perm[v]);
    CHECK(graphs_isomorphic(p, q));
}

TEST_CASE("DOT export mentions every edge") {
    auto dot = graph_to_dot(cycle_graph(3), "c3");
    CHECK(dot.find("c3") != std::string::npos);
    CHECK(dot.find("v0 -- v1") != std::string::npos);
    CHECK(dot.find("v1 -- v2") != std::string::npos);
    CHECK(dot.find("v0 -- v2") != std::string::npos);
}
