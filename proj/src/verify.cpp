#include "nps/verify.hpp"

#include "nps/intersect.hpp"
#include "nps/parse.hpp"

namespace nps {

std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::skipped: return "skipped";
    }
    return "?";
}

bool VerificationReport::all_passed() const {
    for (const auto& c : checks)
        if (c.status == CheckStatus::fail) return false;
    return true;
}

namespace {

Check compare(const std::string& name, const std::string& rel, std::int64_t lhs, std::int64_t rhs,
              const std::string& note = "") {
    Check c{name, CheckStatus::fail, rel, lhs, rhs, note};
    const bool ok = rel == ">=" ? lhs >= rhs : lhs == rhs;
    c.status = ok ? CheckStatus::pass : CheckStatus::fail;
    return c;
}

Check skipped(const std::string& name, const std::string& rel, const std::string& note) {
    return {name, CheckStatus::skipped, rel, 0, 0, note};
}

} // namespace

VerificationReport verify_theorem(const CurveSpec& spec, std::optional<std::int64_t> trunc_floor) {
    VerificationReport rep;
    rep.id = spec.id;
    rep.characteristic = spec.field.characteristic();
    if (spec.branches.empty()) throw input_error("curve '" + spec.id + "' has no branches");

    std::vector<ResolvedBranch> branches;
    branches.reserve(spec.branches.size());
    for (const auto& b : spec.branches) branches.push_back(resolve_branch(b, spec.field));

    PairwiseI0 i0 = pairwise_i0(spec, branches);
    rep.i0 = i0;
    rep.r_f = static_cast<std::int64_t>(branches.size());
    rep.mu_bar = mu_bar_curve(branches, i0);
    rep.delta_f = Rat(Int(rep.mu_bar) + rep.r_f - 1, Int(2));

    ExpandedCurve ex = expand_curve(branches, i0, trunc_floor);
    rep.expansion_exact = ex.exact;
    rep.expansion_bound = ex.bound;
    rep.expanded = render_poly(ex.poly);

    PolygonInvariants inv = invariants_bundle(ex.poly);
    rep.mu_N = inv.mu_N;
    rep.r_N = inv.r_N;
    rep.delta_N = inv.delta_N;
    rep.mu_route = inv.route;

    rep.degeneracy = analyze_degeneracy(ex.poly);
    rep.nondegenerate = rep.degeneracy.nondegenerate;
    rep.strongly_nondegenerate = rep.degeneracy.strongly_nondegenerate;
    rep.edges_only_strong = rep.degeneracy.edges_only_strong;

    if (ex.exact) {
        try {
            Milnor m = milnor_number(ex.poly);
            if (m.finite) {
                rep.milnor = m.value;
            } else {
                rep.milnor_infinite = true;
                rep.milnor_note = m.note;
            }
        } catch (const input_error& e) {
            // Oracle failure (for example no admissible shear in a tiny field):
            // the dependent checks are reported as skipped, never as passed.
            rep.milnor_note = std::string("Milnor oracle unavailable: ") + e.what();
        }
    } else {
        rep.milnor_note = "expansion is truncated; Milnor number not computed";
    }

    // (a) Theorem, both inequalities.
    rep.checks.push_back(compare("theorem.mu_gap_ge_r_gap", ">=", rep.mu_bar - rep.mu_N, rep.r_N - rep.r_f));
    rep.checks.push_back(compare("theorem.r_gap_ge_zero", ">=", rep.r_N - rep.r_f, 0));
    // (b) Non-degenerate equalities.
    if (rep.nondegenerate) {
        rep.checks.push_back(compare("nondegenerate.mu_equal", "==", rep.mu_bar, rep.mu_N));
        rep.checks.push_back(compare("nondegenerate.r_equal", "==", rep.r_f, rep.r_N));
    } else {
        rep.checks.push_back(skipped("nondegenerate.mu_equal", "==", "curve is degenerate"));
        rep.checks.push_back(skipped("nondegenerate.r_equal", "==", "curve is degenerate"));
    }
    // (c) r(f) <= r(N).
    rep.checks.push_back(compare("corollary.r_le_rN", ">=", rep.r_N, rep.r_f));
    // (d) delta(N) <= delta(f); both are half-integers with the same parity shift,
    //     so compare 2*delta exactly.
    rep.checks.push_back(compare("corollary.delta_N_le_delta", ">=",
                                 rep.mu_bar + rep.r_f - 1, rep.mu_N + rep.r_N - 1));
    // (e) Melle-Wall.
    if (rep.milnor) {
        rep.checks.push_back(compare("melle_wall.mu_ge_mu_bar", ">=", *rep.milnor, rep.mu_bar));
    } else {
        rep.checks.push_back(skipped("melle_wall.mu_ge_mu_bar", ">=",
                                     rep.milnor_infinite ? "Milnor number is infinite" : rep.milnor_note));
    }
    // (f) Tameness under strong non-degeneracy.
    if (rep.strongly_nondegenerate && rep.milnor) {
        rep.checks.push_back(compare("tameness.mu_equal_mu_bar", "==", *rep.milnor, rep.mu_bar));
    } else {
        rep.checks.push_back(skipped("tameness.mu_equal_mu_bar", "==",
                                     rep.strongly_nondegenerate
                                         ? "Milnor number unavailable"
                                         : "curve is not strongly non-degenerate"));
    }
    return rep;
}

} // namespace nps
