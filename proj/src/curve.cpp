#include "nps/curve.hpp"

#include <algorithm>
#include <numeric>

#include "nps/intersect.hpp"
#include "nps/linalg.hpp"
#include "nps/newton.hpp"
#include "nps/parse.hpp"

namespace nps {

namespace {

std::vector<Exp2> monomials_of_degree_up_to(std::int64_t d) {
    std::vector<Exp2> ms;
    for (std::int64_t t = 0; t <= d; ++t)
        for (std::int64_t a = t; a >= 0; --a) ms.push_back({a, t - a});
    return ms;
}

std::int64_t param_degree(const UniPoly& s) { return s.is_zero() ? 0 : s.degree(); }

} // namespace

Poly implicitize(const UniPoly& xt, const UniPoly& yt, std::int64_t degree_cap) {
    const Field& K = xt.field();
    if (xt.field() != yt.field()) throw input_error("field mismatch");
    if (xt.truncation() || yt.truncation())
        throw input_error("implicitization requires exact polynomial parametrizations");
    if (xt.is_zero() && yt.is_zero()) throw input_error("zero parametrization");
    {
        std::int64_t g = 0;
        for (const UniPoly* s : {&xt, &yt})
            for (std::size_t i = 0; i < s->coeffs().size(); ++i)
                if (!s->coeffs()[i].is_zero()) g = std::gcd(g, static_cast<std::int64_t>(i));
        if (g != 1)
            throw input_error("parametrization is not primitive (all exponents share the factor " +
                              std::to_string(g) + ")");
    }
    const std::int64_t tmax = std::max<std::int64_t>(1, std::max(param_degree(xt), param_degree(yt)));

    for (std::int64_t D = 1; D <= degree_cap; ++D) {
        std::vector<Exp2> mons = monomials_of_degree_up_to(D);
        const std::int64_t rows_needed = D * tmax + 1;
        // Column j = coefficients of t^r in x(t)^a y(t)^b.
        std::vector<Row> m(static_cast<std::size_t>(rows_needed),
                           Row(mons.size(), Coeff(K)));
        std::vector<UniPoly> xpow{UniPoly::constant(K, Coeff::from_int(K, 1))};
        std::vector<UniPoly> ypow = xpow;
        auto power = [&](std::vector<UniPoly>& cache, const UniPoly& base, std::int64_t e) -> const UniPoly& {
            while (static_cast<std::int64_t>(cache.size()) <= e) cache.push_back(cache.back() * base);
            return cache[static_cast<std::size_t>(e)];
        };
        for (std::size_t j = 0; j < mons.size(); ++j) {
            UniPoly prod = power(xpow, xt, mons[j].a) * power(ypow, yt, mons[j].b);
            for (std::int64_t r = 0; r <= prod.degree(); ++r)
                m[static_cast<std::size_t>(r)][j] = prod.coeff(r);
        }
        std::size_t kdim = 0;
        Row v = kernel_vector(std::move(m), mons.size(), K, &kdim);
        if (v.empty()) continue;
        if (kdim != 1)
            throw input_error("implicitization kernel is not one-dimensional; "
                              "the parametrization is not primitive");
        Poly f(K);
        for (std::size_t j = 0; j < mons.size(); ++j)
            if (!v[j].is_zero()) f.add_term(mons[j], v[j]);
        // Germ consistency: the intersection with the axis x = 0 must match
        // ord x(t); a mismatch means the parametrization is not birational.
        if (!xt.is_zero()) {
            UniPoly f0y(K);
            for (const auto& [e, c] : f.terms())
                if (e.a == 0) f0y.set_coeff(e.b, f0y.coeff(e.b) + c);
            if (f0y.is_zero() || f0y.order() != xt.order())
                throw input_error("implicit factor degree mismatch; the parametrization "
                                  "does not cover its branch once");
        }
        return normalize_factor(f);
    }
    throw input_error("implicitization cap (degree " + std::to_string(degree_cap) +
                      ") exceeded; supply the branch factor explicitly");
}

Poly normalize_factor(const Poly& f) {
    if (f.is_zero()) throw input_error("cannot normalize the zero polynomial");
    // Leading term = last in the (total degree, alpha) order.
    Exp2 lead{-1, -1};
    std::int64_t best_total = -1;
    for (const auto& [e, c] : f.terms()) {
        if (e.total() > best_total || (e.total() == best_total && e.a > lead.a)) {
            best_total = e.total();
            lead = e;
        }
    }
    if (f.field().is_rational()) {
        // Clear denominators, divide by content, make the leading term positive.
        Int denlcm = 1, numgcd = 0;
        for (const auto& [e, c] : f.terms()) {
            denlcm = boost::multiprecision::lcm(denlcm, denominator(c.rat()));
        }
        for (const auto& [e, c] : f.terms()) {
            Int n = numerator(c.rat() * Rat(denlcm));
            numgcd = boost::multiprecision::gcd(numgcd, n);
        }
        Rat scale(denlcm, numgcd);
        if (f.coeff(lead).rat() * scale < 0) scale = -scale;
        return f.scaled(Coeff::from_rat(f.field(), scale));
    }
    return f.scaled(f.coeff(lead).inv());
}

ResolvedBranch resolve_branch(const BranchSpec& b, const Field& field) {
    ResolvedBranch r;
    if (b.has_param() == b.semigroup_gens.has_value())
        throw input_error("a branch needs exactly one of: a parametrization (x,y) or a semigroup");
    if (b.has_param()) {
        const UniPoly& xt = *b.xt;
        const UniPoly& yt = *b.yt;
        if (xt.field() != field || yt.field() != field) throw input_error("field mismatch");
        CharExponents ce = char_exponents_from_param(xt, yt);
        r.semigroup = ce.semigroup;
        r.beta = ce.beta;
        r.xt = xt;
        r.yt = yt;
        if (b.factor) {
            r.factor = normalize_factor(*b.factor);
            r.factor_provenance = "user";
            // The factor must vanish identically on the branch.
            const std::int64_t bnd =
                r.factor.total_degree() * std::max<std::int64_t>(1, std::max(param_degree(xt), param_degree(yt))) + 1;
            UniPoly s = substitute_param(r.factor, xt, yt, bnd);
            if (!s.is_zero())
                throw input_error("the supplied factor does not vanish on the branch parametrization");
        } else if (xt.is_zero()) {
            r.factor = normalize_factor(parse_poly("x", field));
            r.factor_provenance = "axis";
        } else if (yt.is_zero()) {
            r.factor = normalize_factor(parse_poly("y", field));
            r.factor_provenance = "axis";
        } else {
            r.factor = implicitize(xt, yt);
            r.factor_provenance = "implicitized";
        }
    } else {
        r.semigroup = semigroup_from_generators(*b.semigroup_gens);
        if (!b.factor)
            throw input_error("a semigroup-only branch needs an explicit factor for expansion");
        r.factor = normalize_factor(*b.factor);
        r.factor_provenance = "user";
    }
    if (!r.factor.coeff({0, 0}).is_zero())
        throw input_error("a branch factor must vanish at the origin");
    r.mu_bar = mu_bar_branch(r.semigroup);
    return r;
}

PairwiseI0 pairwise_i0(const CurveSpec& spec, const std::vector<ResolvedBranch>& branches) {
    const std::size_t s = branches.size();
    PairwiseI0 out;
    out.value.assign(s, std::vector<std::int64_t>(s, 0));
    out.provenance.assign(s, std::vector<std::string>(s, ""));
    if (spec.i0_matrix) {
        const auto& m = *spec.i0_matrix;
        if (m.size() != s) throw input_error("i0 matrix size mismatch");
        for (std::size_t i = 0; i < s; ++i) {
            if (m[i].size() != s) throw input_error("i0 matrix is not square");
            for (std::size_t j = 0; j < s; ++j) {
                if (i == j) continue;
                if (m[i][j] != m[j][i]) throw input_error("i0 matrix is not symmetric");
                if (m[i][j] <= 0) throw input_error("pairwise i0 entries must be positive");
            }
        }
    }
    for (std::size_t i = 0; i < s; ++i) {
        for (std::size_t j = i + 1; j < s; ++j) {
            std::int64_t v;
            std::string prov;
            if (spec.i0_matrix) {
                v = (*spec.i0_matrix)[i][j];
                prov = "user";
            } else {
                const ResolvedBranch* pb = nullptr;
                const ResolvedBranch* other = nullptr;
                if (branches[i].xt) { pb = &branches[i]; other = &branches[j]; }
                else if (branches[j].xt) { pb = &branches[j]; other = &branches[i]; }
                if (pb) {
                    const std::int64_t tmax = std::max<std::int64_t>(
                        1, std::max(param_degree(*pb->xt), param_degree(*pb->yt)));
                    const std::int64_t bnd = other->factor.total_degree() * tmax + 1;
                    try {
                        v = i0_param(*pb->xt, *pb->yt, other->factor, bnd);
                    } catch (const indeterminate_error&) {
                        throw input_error("branches " + std::to_string(i) + " and " + std::to_string(j) +
                                          " share a component (i0 is infinite); f is not reduced");
                    }
                    prov = "param";
                } else {
                    v = i0_resultant(branches[i].factor, branches[j].factor);
                    prov = "resultant";
                }
            }
            out.value[i][j] = out.value[j][i] = v;
            out.provenance[i][j] = out.provenance[j][i] = prov;
        }
    }
    return out;
}

std::int64_t mu_bar_curve(const std::vector<ResolvedBranch>& branches, const PairwiseI0& i0) {
    const std::size_t s = branches.size();
    if (s == 0) throw input_error("curve with no branches");
    std::int64_t mu = 0;
    for (const auto& b : branches) mu += b.mu_bar;
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = i + 1; j < s; ++j) mu += 2 * i0.value[i][j];
    return mu - (static_cast<std::int64_t>(s) - 1);
}

ExpandedCurve expand_curve(const std::vector<ResolvedBranch>& branches, const PairwiseI0& i0,
                           std::optional<std::int64_t> bound_floor) {
    if (branches.empty()) throw input_error("curve with no branches");
    const Field& K = branches.front().factor.field();
    // Pairwise distinctness (f must be reduced).
    for (std::size_t i = 0; i < branches.size(); ++i)
        for (std::size_t j = i + 1; j < branches.size(); ++j)
            if (branches[i].factor.same_terms(branches[j].factor))
                throw input_error("branches " + std::to_string(i) + " and " + std::to_string(j) +
                                  " have identical factors; f would not be reduced");
    std::int64_t sum_cond = 0, sum_i0 = 0, sum_deg = 0;
    for (const auto& b : branches) {
        sum_cond += b.semigroup.conductor;
        sum_deg += b.factor.total_degree();
    }
    for (std::size_t i = 0; i < branches.size(); ++i)
        for (std::size_t j = i + 1; j < branches.size(); ++j) sum_i0 += i0.value[i][j];
    std::int64_t bound = 2 * (sum_cond + sum_i0) + 6;
    if (bound_floor) bound = std::max(bound, *bound_floor);

    ExpandedCurve out{Poly::constant(K, Coeff::from_int(K, 1)), bound, false};
    if (sum_deg <= bound) {
        // The full product fits; compute it exactly.
        for (const auto& b : branches) out.poly = out.poly * b.factor;
        out.exact = true;
        return out;
    }
    auto truncated_product = [&](std::int64_t bnd) {
        Poly acc = Poly::constant(K, Coeff::from_int(K, 1));
        for (const auto& b : branches) acc = multiply_truncated(acc, b.factor, bnd);
        return acc;
    };
    for (int escalation = 0; escalation < 2; ++escalation) {
        Poly at = truncated_product(bound);
        Poly at2 = truncated_product(2 * bound);
        if (newton_polygon(at) == newton_polygon(at2)) {
            out.poly = at;
            out.bound = bound;
            return out;
        }
        bound *= 2;
    }
    throw indeterminate_error("expanded polygon did not stabilize under doubling the truncation bound");
}

} // namespace nps
