#pragma once

// JSON serialization of the toolkit's public artifacts: geometries,
// hypermaps, coset tables, graphs, capacity and verification reports.

#include <string>
#include <vector>

#include "json.hpp"
#include "qdessins/belyi.hpp"
#include "qdessins/contextuality.hpp"
#include "qdessins/graphs.hpp"
#include "qdessins/hypermap.hpp"
#include "qdessins/lowindex.hpp"

namespace qdessins {

using json = nlohmann::json;

inline json geometry_to_json(const PointLineGeometry& g) {
    json j;
    for (const auto& p : g.points) j["points"].push_back(pauli_to_string(p));
    j["lines"] = g.lines;
    j["signs"] = g.signs;
    return j;
}

inline PointLineGeometry geometry_from_json(const json& j) {
    PointLineGeometry g;
    for (const auto& s : j.at("points")) g.points.push_back(pauli_parse(s.get<std::string>()));
    g.lines = j.at("lines").get<std::vector<std::vector<int>>>();
    g.signs = j.at("signs").get<std::vector<int>>();
    validate_geometry(g);
    return g;
}

inline json hypermap_to_json(const Hypermap& m) {
    json j;
    j["n"] = m.n;
    auto cyc = [](const Perm& p) {
        json out = json::array();
        for (const auto& c : cycles(p)) {
            json cy = json::array();
            for (int v : c) cy.push_back(v + 1);
            out.push_back(cy);
        }
        return out;
    };
    j["alpha"] = cyc(m.alpha);
    j["beta"] = cyc(m.beta);
    return j;
}

inline Hypermap hypermap_from_json(const json& j) {
    int n = j.at("n").get<int>();
    auto read = [&](const json& arr) {
        Perm p(n);
        for (const auto& cy : arr) {
            std::vector<int> c = cy.get<std::vector<int>>();
            for (size_t k = 0; k < c.size(); ++k)
                p.img[c[k] - 1] = c[(k + 1) % c.size()] - 1;
        }
        return p;
    };
    return Hypermap(n, read(j.at("alpha")), read(j.at("beta")));
}

inline json coset_table_to_json(const CosetTable& t) {
    json j;
    j["index"] = t.index;
    json acts = json::array();
    for (const auto& a : t.action) {
        json row = json::array();
        for (int v : a.img) row.push_back(v + 1);  // 1-based cosets
        acts.push_back(row);
    }
    j["generators"] = {"r0", "r1"};
    j["actions"] = acts;
    return j;
}

inline json graph_to_json(const SmallGraph& g) {
    json j;
    j["n"] = g.n;
    j["edges"] = json::array();
    for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
    return j;
}

inline json capacity_report_to_json(const CapacityReport& r) {
    json j;
    j["alpha"] = r.alpha;
    j["omega"] = r.omega;
    j["chi"] = r.chi;
    if (r.theta) j["theta"] = *r.theta;
    j["shannon_lower"] = r.shannon_lower;
    if (r.shannon_upper) j["shannon_upper"] = *r.shannon_upper;
    j["alpha_strong_square"] = r.alpha_square;
    j["square_witness"] = r.square_witness;
    j["complement_omega"] = r.complement_omega;
    j["complement_chi"] = r.complement_chi;
    return j;
}

inline json belyi_report_to_json(const ComplexRationalMap& f, const Hypermap& m,
                                 const std::string& dessin_id) {
    json j;
    j["degree"] = f.degree();
    json cvs = json::array();
    for (const auto& v : critical_values(f)) {
        if (v.infinite) cvs.push_back("inf");
        else cvs.push_back({v.value.real(), v.value.imag()});
    }
    j["critical_values"] = cvs;
    j["belyi"] = critical_values_within_belyi_set(f);
    RamificationPassport p = ramification_passport(f);
    j["passport"] = {{"over0", p.over0}, {"over1", p.over1}, {"overInf", p.overInf}};
    j["dessin"] = dessin_id;
    j["matches_dessin"] = matches_dessin(f, m);
    return j;
}

}  // namespace qdessins
