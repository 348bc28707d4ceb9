// npsing: Newton-polygon invariants of plane curve singularities.
//
// Subcommands: polygon, invariants, nondeg, semigroup, branch, i0, verify,
// corpus. Exit codes: 0 success / all checks pass, 1 a verification check
// failed, 2 input error.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "nps/branch.hpp"
#include "nps/corpus.hpp"
#include "nps/intersect.hpp"
#include "nps/json_io.hpp"
#include "nps/parse.hpp"
#include "nps/verify.hpp"

namespace {

using namespace nps;

struct GlobalOpts {
    std::uint64_t characteristic = 0;
    bool as_json = false;
    std::uint64_t seed = 1;
    std::int64_t trunc = 0; // 0 = unset
};

Poly read_poly(const std::string& text, const GlobalOpts& g) {
    Poly f = parse_poly(text, Field(g.characteristic));
    if (g.trunc > 0) f = f.truncated(g.trunc);
    return f;
}

void emit(const json& j, bool as_json, const std::string& fallback) {
    if (as_json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << fallback;
}

std::string polygon_text(const NewtonPolygon& n) {
    std::ostringstream os;
    os << "offsets: (" << n.k << ", " << n.l << ")\n";
    os << "vertices:";
    for (const auto& v : n.vertices) os << " (" << v.a << "," << v.b << ")";
    os << "\nedges:\n";
    for (const auto& e : n.edges) {
        EdgeMeasures m = edge_measures(e);
        os << "  (" << e.start.a << "," << e.start.b << ")-(" << e.end.a << "," << e.end.b
           << ")  |S|_1=" << m.h << " |S|_2=" << m.v << " r(S)=" << m.r << "\n";
    }
    PolygonMeasures pm = polygon_measures(n);
    os << "totals: |N|_1=" << pm.h_total << " |N|_2=" << pm.v_total
       << " [N,N]=" << pm.bracket_total << " r(N)=" << pm.r_N << "\n";
    for (const auto& w : n.warnings) os << "warning: " << w << "\n";
    return os.str();
}

int run_verify(const std::string& spec_path, const GlobalOpts& g, const std::string& out_path) {
    std::ifstream in(spec_path);
    if (!in) {
        std::cerr << "error: cannot open " << spec_path << "\n";
        return 2;
    }
    json j = json::parse(in);
    std::vector<CurveSpec> specs = corpus_from_json(j);
    json reports = json::array();
    bool all_ok = true;
    std::optional<std::int64_t> floor;
    if (g.trunc > 0) floor = g.trunc;
    for (const auto& spec : specs) {
        VerificationReport rep = verify_theorem(spec, floor);
        all_ok = all_ok && rep.all_passed();
        reports.push_back(report_to_json(rep));
        if (!g.as_json) {
            std::cout << rep.id << " (char " << rep.characteristic << "): mu_bar=" << rep.mu_bar
                      << " mu_N=" << rep.mu_N << " r=" << rep.r_f << " r_N=" << rep.r_N
                      << (rep.nondegenerate ? " nondegenerate" : " degenerate")
                      << (rep.all_passed() ? "  [all checks pass]" : "  [CHECK FAILED]") << "\n";
            for (const auto& c : rep.checks) {
                std::cout << "    " << c.name << ": " << to_string(c.status);
                if (c.status != CheckStatus::skipped)
                    std::cout << "  (" << c.lhs << " " << c.relation << " " << c.rhs << ")";
                if (!c.note.empty()) std::cout << "  -- " << c.note;
                std::cout << "\n";
            }
        }
    }
    if (g.as_json) std::cout << (reports.size() == 1 ? reports[0] : reports).dump(2) << "\n";
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        out << reports.dump(2) << "\n";
    }
    return all_ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Newton-polygon invariants of plane curve singularities"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--char", g.characteristic, "field characteristic (0 or a prime)");
    app.add_flag("--json", g.as_json, "machine-readable JSON output");
    app.add_option("--seed", g.seed, "corpus generator seed");
    app.add_option("--trunc", g.trunc, "truncation bound override");

    std::string poly_text, spec_path, out_path, gens_text, xt_text, yt_text, f_text, g_text;
    std::size_t corpus_count = 100;
    std::string chars_text = "0,2,3,5,7";

    auto* cmd_polygon = app.add_subcommand("polygon", "Newton polygon and edge measures");
    cmd_polygon->add_option("--poly", poly_text, "bivariate expression in x, y")->required();

    auto* cmd_inv = app.add_subcommand("invariants", "mu(N), delta(N), r(N)");
    cmd_inv->add_option("--poly", poly_text)->required();

    auto* cmd_nondeg = app.add_subcommand("nondeg", "non-degeneracy report");
    cmd_nondeg->add_option("--poly", poly_text)->required();

    auto* cmd_semi = app.add_subcommand("semigroup", "branch semigroup data from generators");
    cmd_semi->add_option("--gens", gens_text, "comma-separated generators, e.g. 4,6,13")->required();

    auto* cmd_branch = app.add_subcommand("branch", "characteristic exponents and semigroup");
    cmd_branch->add_option("--x", xt_text, "x(t)")->required();
    cmd_branch->add_option("--y", yt_text, "y(t)")->required();

    auto* cmd_i0 = app.add_subcommand("i0", "intersection multiplicity, three methods");
    cmd_i0->add_option("--f", f_text, "first curve (or use --x/--y for a branch)");
    cmd_i0->add_option("--g", g_text, "second curve")->required();
    cmd_i0->add_option("--x", xt_text, "branch x(t)");
    cmd_i0->add_option("--y", yt_text, "branch y(t)");

    auto* cmd_verify = app.add_subcommand("verify", "verify the invariant inequalities on a spec or corpus file");
    cmd_verify->add_option("--spec", spec_path, "curve spec or corpus JSON file")->required();
    cmd_verify->add_option("-o,--out", out_path, "write the JSON report array here");

    auto* cmd_corpus = app.add_subcommand("corpus", "generate a curve corpus");
    cmd_corpus->add_option("--count", corpus_count, "number of curves");
    cmd_corpus->add_option("--chars", chars_text, "comma-separated characteristics");
    cmd_corpus->add_option("-o,--out", out_path, "output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_polygon->parsed()) {
            NewtonPolygon n = newton_polygon(read_poly(poly_text, g));
            emit(polygon_to_json(n), g.as_json, polygon_text(n));
        } else if (cmd_inv->parsed()) {
            PolygonInvariants inv = invariants_bundle(read_poly(poly_text, g));
            std::ostringstream os;
            os << "mu_newton=" << inv.mu_N << " delta_newton=" << inv.delta_N
               << " r_newton=" << inv.r_N << " route=" << to_string(inv.route) << "\n";
            emit(invariants_to_json(inv), g.as_json, os.str());
        } else if (cmd_nondeg->parsed()) {
            DegeneracyReport d = analyze_degeneracy(read_poly(poly_text, g));
            std::ostringstream os;
            os << "nondegenerate=" << (d.nondegenerate ? "true" : "false")
               << " strongly_nondegenerate=" << (d.strongly_nondegenerate ? "true" : "false")
               << " edges_only_strong=" << (d.edges_only_strong ? "true" : "false") << "\n";
            emit(degeneracy_to_json(d), g.as_json, os.str());
        } else if (cmd_semi->parsed()) {
            std::vector<std::int64_t> gens;
            std::stringstream ss(gens_text);
            for (std::string tok; std::getline(ss, tok, ',');) gens.push_back(std::stoll(tok));
            Semigroup s = semigroup_from_generators(gens);
            CotaCheck c = cota_check(s);
            json j = semigroup_to_json(s);
            j["cota"] = {{"bound_holds", c.bound_holds}, {"equality_iff_coprime", c.equality_iff_coprime}};
            j["puiseux"] = puiseux_sequence(s);
            std::ostringstream os;
            os << "generators:";
            for (auto v : s.generators) os << " " << v;
            os << "\nconductor: " << s.conductor << "\n";
            os << "cota bound holds: " << (c.bound_holds ? "yes" : "no") << "\n";
            emit(j, g.as_json, os.str());
        } else if (cmd_branch->parsed()) {
            Field K(g.characteristic);
            CharExponents ce = char_exponents_from_param(parse_uniseries(xt_text, K), parse_uniseries(yt_text, K));
            json j;
            j["beta"] = ce.beta;
            j["semigroup"] = semigroup_to_json(ce.semigroup);
            std::ostringstream os;
            os << "beta:";
            for (auto b : ce.beta) os << " " << b;
            os << "\ngenerators:";
            for (auto v : ce.semigroup.generators) os << " " << v;
            os << "\nconductor: " << ce.semigroup.conductor << "\n";
            emit(j, g.as_json, os.str());
        } else if (cmd_i0->parsed()) {
            Field K(g.characteristic);
            Poly gc = parse_poly(g_text, K);
            json j;
            std::ostringstream os;
            if (!xt_text.empty()) {
                UniPoly xt = parse_uniseries(xt_text, K), yt = parse_uniseries(yt_text, K);
                const std::int64_t tmax = std::max<std::int64_t>(
                    1, std::max(xt.is_zero() ? 0 : xt.degree(), yt.is_zero() ? 0 : yt.degree()));
                std::int64_t bound = g.trunc > 0 ? g.trunc : gc.total_degree() * tmax + 1;
                std::int64_t vp = i0_param(xt, yt, gc, bound);
                Poly fc = implicitize(xt, yt);
                std::int64_t vr = i0_resultant(fc, gc);
                std::int64_t vd = i0_dim_oracle(fc, gc);
                j = {{"param", vp}, {"resultant", vr}, {"dim", vd}, {"implicit_factor", render_poly(fc)}};
                os << "i0(param)=" << vp << " i0(resultant)=" << vr << " i0(dim)=" << vd << "\n";
            } else {
                if (f_text.empty()) throw input_error("i0 needs --f or a branch --x/--y");
                Poly fc = parse_poly(f_text, K);
                std::int64_t vr = i0_resultant(fc, gc);
                std::int64_t vd = i0_dim_oracle(fc, gc);
                j = {{"resultant", vr}, {"dim", vd}};
                os << "i0(resultant)=" << vr << " i0(dim)=" << vd << "\n";
            }
            emit(j, g.as_json, os.str());
        } else if (cmd_verify->parsed()) {
            return run_verify(spec_path, g, out_path);
        } else if (cmd_corpus->parsed()) {
            std::vector<std::uint64_t> chars;
            std::stringstream ss(chars_text);
            for (std::string tok; std::getline(ss, tok, ',');) chars.push_back(std::stoull(tok));
            auto specs = generate_corpus(g.seed, corpus_count, chars);
            json j = corpus_to_json(specs);
            if (out_path.empty()) {
                std::cout << j.dump(2) << "\n";
            } else {
                std::ofstream out(out_path);
                out << j.dump(2) << "\n";
                std::cout << "wrote " << specs.size() << " curves to " << out_path << "\n";
            }
        }
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const indeterminate_error& e) {
        std::cerr << "indeterminate: " << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
