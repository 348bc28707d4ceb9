#include "nps/json_io.hpp"

#include "nps/parse.hpp"

namespace nps {

json rat_to_json(const Rat& r) {
    if (denominator(r) == 1) {
        if (numerator(r) >= std::numeric_limits<std::int64_t>::min() &&
            numerator(r) <= std::numeric_limits<std::int64_t>::max())
            return numerator(r).convert_to<std::int64_t>();
    }
    return r.str();
}

json polygon_to_json(const NewtonPolygon& n) {
    json j;
    j["vertices"] = json::array();
    for (const auto& v : n.vertices) j["vertices"].push_back({v.a, v.b});
    j["edges"] = json::array();
    for (const auto& e : n.edges) {
        EdgeMeasures m = edge_measures(e);
        j["edges"].push_back({{"start", {e.start.a, e.start.b}},
                              {"end", {e.end.a, e.end.b}},
                              {"h", m.h},
                              {"v", m.v},
                              {"r", m.r}});
    }
    j["offsets"] = {n.k, n.l};
    PolygonMeasures pm = polygon_measures(n);
    j["totals"] = {{"h", pm.h_total}, {"v", pm.v_total}, {"bracket", pm.bracket_total}, {"r", pm.r_N}};
    if (n.has_edges()) {
        LatticeCounts lc = lattice_counts(n);
        j["lattice"] = {{"on_polygon", lc.on_polygon},
                        {"below_not_on_axes", lc.below_not_on_axes},
                        {"double_area", lc.double_area}};
    }
    if (!n.warnings.empty()) j["warnings"] = n.warnings;
    return j;
}

json degeneracy_to_json(const DegeneracyReport& d) {
    json j;
    j["nondegenerate"] = d.nondegenerate;
    j["strongly_nondegenerate"] = d.strongly_nondegenerate;
    j["faces_strong"] = d.strongly_nondegenerate;
    j["edges_only_strong"] = d.edges_only_strong;
    j["per_edge"] = json::array();
    for (const auto& e : d.per_edge) {
        j["per_edge"].push_back({{"start", {e.edge.start.a, e.edge.start.b}},
                                 {"end", {e.edge.end.a, e.edge.end.b}},
                                 {"squarefree", e.squarefree},
                                 {"distinct_factors", e.distinct_factors},
                                 {"multiplicity_pattern", e.multiplicity_pattern},
                                 {"torus_critical", e.torus_critical}});
    }
    j["per_vertex"] = json::array();
    for (const auto& v : d.per_vertex)
        j["per_vertex"].push_back({{"vertex", {v.vertex.a, v.vertex.b}},
                                   {"torus_critical", v.torus_critical}});
    return j;
}

json invariants_to_json(const PolygonInvariants& inv) {
    return {{"mu_newton", inv.mu_N},
            {"delta_newton", rat_to_json(inv.delta_N)},
            {"r_newton", inv.r_N},
            {"routes", {{"mu", to_string(inv.route)}}}};
}

json semigroup_to_json(const Semigroup& s) {
    json j;
    j["generators"] = s.generators;
    j["e"] = s.e;
    j["n"] = s.n;
    j["conductor"] = s.conductor;
    return j;
}

json report_to_json(const VerificationReport& r) {
    json j;
    j["schema"] = "v1";
    j["id"] = r.id;
    j["char"] = r.characteristic;
    j["mu_bar"] = r.mu_bar;
    j["mu_newton"] = r.mu_N;
    j["r_f"] = r.r_f;
    j["r_newton"] = r.r_N;
    j["delta_f"] = rat_to_json(r.delta_f);
    j["delta_newton"] = rat_to_json(r.delta_N);
    j["nondegenerate"] = r.nondegenerate;
    j["strongly_nondegenerate"] = r.strongly_nondegenerate;
    j["edges_only_strong"] = r.edges_only_strong;
    j["routes"] = {{"mu", to_string(r.mu_route)}};
    if (r.milnor)
        j["milnor"] = *r.milnor;
    else if (r.milnor_infinite)
        j["milnor"] = "infinite";
    else
        j["milnor"] = "skipped";
    if (!r.milnor_note.empty()) j["milnor_note"] = r.milnor_note;
    j["expansion"] = {{"exact", r.expansion_exact}, {"bound", r.expansion_bound}, {"poly", r.expanded}};
    j["i0"] = {{"matrix", r.i0.value}, {"provenance", r.i0.provenance}};
    j["degeneracy"] = degeneracy_to_json(r.degeneracy);
    j["checks"] = json::array();
    for (const auto& c : r.checks) {
        json jc{{"name", c.name}, {"status", to_string(c.status)}, {"relation", c.relation}};
        if (c.status != CheckStatus::skipped) {
            jc["lhs"] = c.lhs;
            jc["rhs"] = c.rhs;
        }
        if (!c.note.empty()) jc["note"] = c.note;
        j["checks"].push_back(jc);
    }
    j["all_passed"] = r.all_passed();
    return j;
}

json curve_spec_to_json(const CurveSpec& spec) {
    json j;
    j["id"] = spec.id;
    j["char"] = spec.field.characteristic();
    j["branches"] = json::array();
    for (const auto& b : spec.branches) {
        json jb;
        if (b.xt) {
            jb["x"] = render_uniseries(*b.xt);
            jb["y"] = render_uniseries(*b.yt);
        }
        if (b.semigroup_gens) jb["semigroup"] = *b.semigroup_gens;
        if (b.factor) jb["factor"] = render_poly(*b.factor);
        j["branches"].push_back(jb);
    }
    if (spec.i0_matrix) j["i0"] = *spec.i0_matrix;
    return j;
}

CurveSpec curve_spec_from_json(const json& j) {
    CurveSpec spec;
    if (!j.is_object()) throw input_error("curve spec must be a JSON object");
    spec.field = Field(j.value("char", 0ull));
    spec.id = j.value("id", std::string("curve"));
    if (!j.contains("branches") || !j["branches"].is_array() || j["branches"].empty())
        throw input_error("curve spec needs a non-empty 'branches' array");
    for (const auto& jb : j["branches"]) {
        BranchSpec b;
        if (jb.contains("x") || jb.contains("y")) {
            if (!jb.contains("x") || !jb.contains("y"))
                throw input_error("a parametrized branch needs both 'x' and 'y'");
            b.xt = parse_uniseries(jb["x"].get<std::string>(), spec.field);
            b.yt = parse_uniseries(jb["y"].get<std::string>(), spec.field);
        }
        if (jb.contains("semigroup"))
            b.semigroup_gens = jb["semigroup"].get<std::vector<std::int64_t>>();
        if (jb.contains("factor"))
            b.factor = parse_poly(jb["factor"].get<std::string>(), spec.field);
        spec.branches.push_back(std::move(b));
    }
    if (j.contains("i0"))
        spec.i0_matrix = j["i0"].get<std::vector<std::vector<std::int64_t>>>();
    return spec;
}

std::vector<CurveSpec> corpus_from_json(const json& j) {
    std::vector<CurveSpec> out;
    if (j.is_array()) {
        std::size_t k = 0;
        for (const auto& e : j) {
            CurveSpec s = curve_spec_from_json(e);
            if (s.id == "curve") s.id = "curve-" + std::to_string(k);
            out.push_back(std::move(s));
            ++k;
        }
    } else {
        out.push_back(curve_spec_from_json(j));
    }
    return out;
}

json corpus_to_json(const std::vector<CurveSpec>& specs) {
    json j = json::array();
    for (const auto& s : specs) j.push_back(curve_spec_to_json(s));
    return j;
}

} // namespace nps
