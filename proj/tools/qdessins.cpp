// Command-line front end: one subcommand per reproduction, plus
// `reproduce-all` which runs the whole battery in a fixed order.
// Exit status is 0 exactly when every executed claim matches its target.

#include <CLI11.hpp>

#include <qdessins/belyi.hpp>
#include <qdessins/contextuality.hpp>
#include <qdessins/graphs.hpp>
#include <qdessins/hypermap.hpp>
#include <qdessins/io.hpp>
#include <qdessins/lowindex.hpp>
#include <qdessins/pauli.hpp>
#include <qdessins/permgroup.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <optional>
#include <string>
#include <thread>
#include <vector>

using namespace qdessins;
using nlohmann::json;

namespace {

struct Report {
    std::string claim;
    std::string target;    // "-" when the run is informational
    std::string computed;
    bool match = true;
    std::optional<double> tolerance;
    double seconds = 0;
};

struct Session {
    std::vector<Report> reports;
    bool emit_json = false;
    int workers = 1;

    double timed(const std::function<void()>& f) {
        auto t0 = std::chrono::steady_clock::now();
        f();
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }

    void add(Report r) { reports.push_back(std::move(r)); }

    void claim_count(const std::string& name, long target, long computed, double secs) {
        add({name, std::to_string(target), std::to_string(computed), target == computed,
             std::nullopt, secs});
    }

    void claim_real(const std::string& name, double target, double computed, double tol,
                    double secs) {
        char t[48], c[48];
        std::snprintf(t, sizeof t, "%.9f", target);
        std::snprintf(c, sizeof c, "%.9f", computed);
        add({name, t, c, std::abs(target - computed) <= tol, tol, secs});
    }

    void claim_flag(const std::string& name, bool expected, bool got, double secs) {
        add({name, expected ? "true" : "false", got ? "true" : "false", expected == got,
             std::nullopt, secs});
    }

    void info(const std::string& name, const std::string& computed, double secs) {
        add({name, "-", computed, true, std::nullopt, secs});
    }

    int finish() const {
        bool all = true;
        if (emit_json) {
            json out = json::array();
            for (const auto& r : reports) {
                json j = {{"claim", r.claim},
                          {"target", r.target},
                          {"computed", r.computed},
                          {"match", r.match},
                          {"seconds", r.seconds}};
                if (r.tolerance) j["tolerance"] = *r.tolerance;
                out.push_back(j);
                all &= r.match;
            }
            std::printf("%s\n", out.dump(2).c_str());
        } else {
            for (const auto& r : reports) {
                std::printf("%-5s %-46s target %-14s computed %-14s %7.2fs\n",
                            r.match ? "ok" : "MISS", r.claim.c_str(), r.target.c_str(),
                            r.computed.c_str(), r.seconds);
                all &= r.match;
            }
            std::printf("%s\n", all ? "all claims match" : "some claims do not match");
        }
        return all ? 0 : 1;
    }
};

int env_workers() {
    if (const char* w = std::getenv("QDESSINS_WORKERS")) {
        int v = std::atoi(w);
        if (v > 0) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 4;
}

PermutationGroup grid_symmetry_group() {
    std::vector<std::vector<int>> lines = {{0, 1, 2}, {3, 4, 5}, {6, 7, 8},
                                           {0, 3, 6}, {1, 4, 7}, {2, 5, 8}};
    auto key = [&](const std::vector<int>& p) {
        std::vector<std::vector<int>> im;
        for (const auto& l : lines) {
            std::vector<int> m = {p[l[0]], p[l[1]], p[l[2]]};
            std::sort(m.begin(), m.end());
            im.push_back(m);
        }
        std::sort(im.begin(), im.end());
        return im;
    };
    std::vector<int> id(9);
    std::iota(id.begin(), id.end(), 0);
    auto base = key(id);
    std::vector<Perm> gens;
    std::vector<int> p = id;
    do {
        if (key(p) == base) gens.push_back(Perm{p});
    } while (std::next_permutation(p.begin(), p.end()));
    return PermutationGroup(9, gens);
}

Hypermap figure_hypermap(const std::string& id) {
    if (id == "fig1")
        return Hypermap{7, parse_cycles("(1)(2,7,6,5)(3,4)", 7), parse_cycles("(1,2)(3,5)", 7)};
    if (id == "fig2")
        return Hypermap{8, parse_cycles("(1,8)(2,3)(4,5)(6,7)", 8),
                        parse_cycles("(1,2)(3,4)(5,6)(7,8)", 8)};
    if (id == "fig3b")
        return Hypermap{9, parse_cycles("(3,9,6,5,2,7)(1,8,4)", 9),
                        parse_cycles("(2,5)(4,7)(6,8)", 9)};
    throw CLI::ValidationError("dessin must be one of fig1, fig2, fig3b");
}

// ---------------------------------------------------------------------------
// subcommand bodies, shared between the individual commands and reproduce-all

void run_bell_census(Session& s, int qubits) {
    static const std::map<int, long> targets = {{1, 0}, {2, 90}, {3, 30240}};
    long computed = 0;
    double secs = s.timed([&] { computed = bell_census(qubits); });
    s.claim_count("bell-census n=" + std::to_string(qubits), targets.at(qubits), computed, secs);
}

void run_pentagram_census(Session& s) {
    PentagramCensus census;
    double secs = s.timed([&] { census = pentagram_census(3, s.workers, true); });
    s.claim_count("pentagram-census count", 12096, census.count, secs);
    std::string hist;
    for (const auto& [neg, cnt] : census.negative_line_histogram)
        hist += std::to_string(neg) + ":" + std::to_string(cnt) + " ";
    s.info("pentagram-census negative-line histogram", hist, 0);
}

void run_gq22(Session& s) {
    Gq22Report r;
    double secs = s.timed([&] { r = verify_gq22(); });
    s.claim_count("gq22 lines", 15, r.lines, secs);
    s.claim_flag("gq22 three lines per point", true, r.three_lines_per_point, 0);
    s.claim_count("gq22 axiom violations", 0, r.axiom_violations, 0);
}

void run_ks_check(Session& s, const std::string& target, long index) {
    if (target == "square") {
        bool colorable = true;
        double secs = s.timed([&] { colorable = ks_colorable(canonical_mermin_square()).has_value(); });
        s.claim_flag("ks-check square colorable", false, colorable, secs);
        return;
    }
    if (target == "pentagram") {
        auto census = pentagram_census(3, s.workers, true);
        if (index < 0 || index >= census.count)
            throw CLI::ValidationError("--index out of range for the census");
        auto g = pentagram_geometry(census, census.pentagrams[index]);
        bool colorable = true;
        double secs = s.timed([&] { colorable = ks_colorable(g).has_value(); });
        s.claim_flag("ks-check pentagram[" + std::to_string(index) + "] colorable", false,
                     colorable, secs);
        return;
    }
    throw CLI::ValidationError("--target must be square or pentagram");
}

void run_lowindex(Session& s, int index) {
    static const std::map<int, long> targets = {{1, 1},  {2, 3},  {3, 3},    {4, 10},  {5, 15},
                                                {6, 56}, {7, 131}, {9, 1551}, {10, 5916}};
    std::vector<CosetTable> subs;
    double secs =
        s.timed([&] { subs = low_index_subgroups(FinitelyPresentedGroup::cartographic_plus(), index); });
    auto it = targets.find(index);
    if (it != targets.end())
        s.claim_count("lowindex classes at index " + std::to_string(index), it->second,
                      (long)subs.size(), secs);
    else
        s.info("lowindex classes at index " + std::to_string(index), std::to_string(subs.size()),
               secs);
}

void run_dessin_search(Session& s, int index, const std::string& dot_dir) {
    const std::vector<std::vector<int>> fano_lines = {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5},
                                                      {1, 4, 6}, {2, 3, 6}, {2, 4, 5}};
    const std::vector<std::vector<int>> grid_lines = {{0, 1, 2}, {3, 4, 5}, {6, 7, 8},
                                                      {0, 3, 6}, {1, 4, 7}, {2, 5, 8}};
    auto subs = low_index_subgroups(FinitelyPresentedGroup::cartographic_plus(), index);
    double filter_secs = 0, stab_secs = 0;

    if (index == 7) {
        std::vector<CosetTable> hits;
        filter_secs = s.timed([&] {
            for (const auto& t : subs) {
                auto g = coset_group(t);
                if (group_order(g) == 168 && is_simple(g)) hits.push_back(t);
            }
        });
        s.claim_count("dessin-search index 7: simple order-168 classes", 10, (long)hits.size(),
                      filter_secs);
        bool full = false, fig_passport = false;
        stab_secs = s.timed([&] {
            for (const auto& t : hits) {
                auto st = max_stabilized_lines(coset_group(t), fano_lines, 7);
                full |= st.all_lines && st.transitive_on_lines;
                auto pp = passport(from_coset_action(t));
                fig_passport |= pp.lambda0 == std::vector<int>{4, 2, 1} &&
                                pp.lambda1 == std::vector<int>{2, 2, 1, 1, 1} &&
                                genus(from_coset_action(t)) == 0;
            }
        });
        s.claim_flag("dessin-search index 7: full transitive line action", true, full, stab_secs);
        s.claim_flag("dessin-search index 7: fig1 passport present", true, fig_passport, 0);
    } else if (index == 9) {
        auto grid = grid_symmetry_group();
        std::vector<CosetTable> hits;
        filter_secs = s.timed([&] {
            for (const auto& t : subs) {
                auto g = coset_group(t);
                if (group_order(g) == 72 && is_isomorphic(g, grid)) hits.push_back(t);
            }
        });
        s.claim_count("dessin-search index 9: grid-group classes", 2, (long)hits.size(),
                      filter_secs);
        int full = 0;
        stab_secs = s.timed([&] {
            for (const auto& t : hits)
                full += max_stabilized_lines(coset_group(t), grid_lines, 9).all_lines;
        });
        // stated target is one class; the computed value is two (both classes
        // act as the full line-preserving group of the grid)
        s.claim_count("dessin-search index 9: classes stabilizing all 6 lines", 1, full,
                      stab_secs);
        int fig_matches = 0;
        for (const auto& t : hits)
            fig_matches += passport(from_coset_action(t)).lambda0 == std::vector<int>{6, 3};
        s.claim_count("dessin-search index 9: fig3b passport matches", 1, fig_matches, 0);
    } else if (index == 10) {
        PermutationGroup s5(5, {parse_cycles("(1,2,3,4,5)", 5), parse_cycles("(1,2)", 5)});
        std::vector<CosetTable> hits;
        filter_secs = s.timed([&] {
            for (const auto& t : subs) {
                auto g = coset_group(t);
                if (group_order(g) == 120 && is_isomorphic(g, s5)) hits.push_back(t);
            }
        });
        s.claim_count("dessin-search index 10: S5 classes", 14, (long)hits.size(), filter_secs);
        auto census = pentagram_census(3, s.workers, true);
        auto geo = pentagram_geometry(census, census.pentagrams.front());
        int pent_max = 0;
        stab_secs = s.timed([&] {
            for (const auto& t : hits)
                pent_max = std::max(
                    pent_max, max_stabilized_lines(coset_group(t), geo.lines, 10).max_lines);
        });
        // stated target is three lines; the computed maximum is five (the
        // pair-type S5 coset actions permute the full pentagram line set)
        s.claim_count("dessin-search index 10: max stabilized pentagram lines", 3, pent_max,
                      stab_secs);
    } else {
        throw CLI::ValidationError("--index must be 7, 9 or 10");
    }

    if (!dot_dir.empty()) {
        for (const char* id : {"fig1", "fig2", "fig3b"}) {
            std::ofstream out(dot_dir + "/" + id + ".dot");
            out << hypermap_to_dot(figure_hypermap(id));
        }
        std::ofstream pout(dot_dir + "/fig4_petersen.dot");
        pout << graph_to_dot(petersen(), "petersen");
        std::ofstream gout(dot_dir + "/fig4_pentagram.dot");
        gout << graph_to_dot(pentagram_graph(), "pentagram");
        s.info("dessin-search DOT files", dot_dir + "/{fig1,fig2,fig3b,fig4_*}.dot", 0);
    }
}

void run_belyi_check(Session& s, const std::string& map_id, const std::string& dessin_id) {
    ComplexRationalMap f;
    if (map_id == "fano")
        f = fano_belyi_map();
    else if (map_id == "klein")
        f = klein_belyi_map();
    else
        throw CLI::ValidationError("--map must be fano or klein");
    Hypermap m = figure_hypermap(dessin_id);
    bool belyi = false, match = false, rh = false;
    double secs = s.timed([&] {
        belyi = critical_values_within_belyi_set(f);
        match = matches_dessin(f, m);
        rh = riemann_hurwitz_consistent(f, genus(m));
    });
    s.claim_flag("belyi-check " + map_id + ": critical values in {0,1,inf}", true, belyi, secs);
    s.claim_flag("belyi-check " + map_id + " vs " + dessin_id + ": passport match", true, match,
                 0);
    s.claim_flag("belyi-check " + map_id + ": Riemann-Hurwitz", true, rh, 0);
}

void run_capacity(Session& s, const std::string& graph_id) {
    SmallGraph g;
    double target_theta;
    if (graph_id == "c5") {
        g = cycle_graph(5);
        target_theta = std::sqrt(5.0);
    } else if (graph_id == "petersen") {
        g = petersen();
        target_theta = 4.0;
    } else if (graph_id == "pentagram") {
        g = pentagram_graph();
        target_theta = 2.5;
    } else {
        throw CLI::ValidationError("--graph must be c5, petersen or pentagram");
    }
    CapacityReport r;
    double secs = s.timed([&] { r = capacity_report(g); });
    if (r.theta) s.claim_real("capacity " + graph_id + ": theta", target_theta, *r.theta, 1e-9, secs);
    if (graph_id == "pentagram") {
        s.claim_flag("capacity pentagram: alpha(G x G) >= 5", true, r.alpha_square >= 5, 0);
        s.claim_flag("capacity pentagram: shannon lower >= sqrt(5)", true,
                     r.shannon_lower >= std::sqrt(5.0) - 1e-9, 0);
    }
    if (graph_id == "petersen") {
        char buf[96];
        std::snprintf(buf, sizeof buf,
                      "computed bracket [%d, %.1f]; stated bracket [2, 4] (reported, not asserted)",
                      r.alpha, r.shannon_upper ? *r.shannon_upper : 0.0);
        s.info("capacity petersen: capacity bracket", buf, 0);
    }
}

void run_reproduce_all(Session& s, const std::set<std::string>& skip) {
    auto want = [&](const std::string& k) { return !skip.count(k); };
    if (want("bell-census")) {
        run_bell_census(s, 2);
        run_bell_census(s, 3);
    }
    if (want("pentagram-census")) run_pentagram_census(s);
    if (want("gq22")) run_gq22(s);
    if (want("ks-check")) {
        run_ks_check(s, "square", 0);
        run_ks_check(s, "pentagram", 0);
    }
    if (want("lowindex")) {
        run_lowindex(s, 7);
        run_lowindex(s, 9);
        run_lowindex(s, 10);
    }
    if (want("dessin-search")) {
        run_dessin_search(s, 7, "");
        run_dessin_search(s, 9, "");
        run_dessin_search(s, 10, "");
    }
    if (want("belyi-check")) {
        run_belyi_check(s, "fano", "fig1");
        run_belyi_check(s, "klein", "fig2");
    }
    if (want("capacity")) {
        run_capacity(s, "c5");
        run_capacity(s, "petersen");
        run_capacity(s, "pentagram");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantum contextuality configurations, dessins and capacity bounds"};
    app.require_subcommand(1);
    app.fallthrough();

    Session session;
    session.workers = env_workers();
    app.add_flag("--json", session.emit_json, "emit the report as JSON");
    app.add_option("--workers", session.workers, "worker thread count for heavy searches");

    int qubits = 2;
    auto* bell = app.add_subcommand("bell-census", "count Bell-CHSH operator quadruples");
    bell->add_option("--qubits", qubits, "qubit count (1-3)")->check(CLI::Range(1, 3));

    auto* pent = app.add_subcommand("pentagram-census", "enumerate the three-qubit pentagrams");
    (void)pent;

    auto* gq = app.add_subcommand("gq22", "verify the generalized quadrangle GQ(2,2)");
    (void)gq;

    std::string ks_target = "square";
    long ks_index = 0;
    auto* ks = app.add_subcommand("ks-check", "Kochen-Specker colorability check");
    ks->add_option("--target", ks_target, "square or pentagram");
    ks->add_option("--index", ks_index, "census pentagram index (with --target pentagram)");

    int li_index = 7;
    auto* li = app.add_subcommand("lowindex", "count conjugacy classes of subgroups");
    li->add_option("--index", li_index, "subgroup index (1-12)")->check(CLI::Range(1, 12));

    int ds_index = 7;
    std::string dot_dir;
    auto* ds = app.add_subcommand("dessin-search", "filter coset groups and stabilize lines");
    ds->add_option("--index", ds_index, "7, 9 or 10");
    ds->add_option("--dot-dir", dot_dir, "directory for DOT figure output");

    std::string map_id = "fano", dessin_id = "fig1";
    auto* bc = app.add_subcommand("belyi-check", "verify a rational map against a dessin");
    bc->add_option("--map", map_id, "fano or klein");
    bc->add_option("--dessin", dessin_id, "fig1, fig2 or fig3b");

    std::string graph_id = "pentagram";
    auto* cap = app.add_subcommand("capacity", "independence, theta and capacity bounds");
    cap->add_option("--graph", graph_id, "c5, petersen or pentagram");

    std::vector<std::string> skips;
    auto* all = app.add_subcommand("reproduce-all", "run the whole battery in fixed order");
    all->add_option("--skip", skips, "subcommand(s) to skip")->allow_extra_args(false);

    CLI11_PARSE(app, argc, argv);

    try {
        if (bell->parsed()) run_bell_census(session, qubits);
        if (pent->parsed()) run_pentagram_census(session);
        if (gq->parsed()) run_gq22(session);
        if (ks->parsed()) run_ks_check(session, ks_target, ks_index);
        if (li->parsed()) run_lowindex(session, li_index);
        if (ds->parsed()) run_dessin_search(session, ds_index, dot_dir);
        if (bc->parsed()) run_belyi_check(session, map_id, dessin_id);
        if (cap->parsed()) run_capacity(session, graph_id);
        if (all->parsed())
            run_reproduce_all(session, std::set<std::string>(skips.begin(), skips.end()));
    } catch (const CLI::ValidationError& e) {
        std::fprintf(stderr, "%s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return session.finish();
}
