#include "nps/intersect.hpp"

#include <algorithm>
#include <numeric>

#include "nps/edge_forms.hpp"
#include "nps/linalg.hpp"

namespace nps {

std::int64_t i0_param(const UniPoly& xt, const UniPoly& yt, const Poly& g, std::int64_t bound) {
    UniPoly s = substitute_param(g, xt, yt, bound);
    try {
        return s.order();
    } catch (const indeterminate_error&) {
        throw indeterminate_error("g vanishes on the branch to order > " + std::to_string(bound) +
                                  " (raise the bound or check for a common component)");
    }
}

// ---------------------------------------------------------------------------
// Resultants: polynomials in y with coefficients in K[x].

namespace {

struct PolyY {
    Field field;
    std::vector<UniPoly> c; // c[i] = coefficient of y^i, a polynomial in x

    void trim() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    std::int64_t deg() const { return static_cast<std::int64_t>(c.size()) - 1; }
    const UniPoly& lc() const { return c.back(); }
};

PolyY to_poly_y(const Poly& f) {
    PolyY r{f.field(), f.y_coefficients()};
    r.trim();
    return r;
}

PolyY scale(const PolyY& a, const UniPoly& s) {
    PolyY r = a;
    for (auto& u : r.c) u = u * s;
    r.trim();
    return r;
}

PolyY sub_shifted(const PolyY& a, const PolyY& b, const UniPoly& s, std::int64_t shift) {
    // a - s * y^shift * b
    PolyY r = a;
    if (static_cast<std::int64_t>(r.c.size()) < b.deg() + shift + 1)
        r.c.resize(static_cast<std::size_t>(b.deg() + shift + 1), UniPoly(a.field));
    for (std::int64_t i = 0; i <= b.deg(); ++i)
        r.c[static_cast<std::size_t>(i + shift)] -= s * b.c[static_cast<std::size_t>(i)];
    r.trim();
    return r;
}

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
PolyY prem(const PolyY& a, const PolyY& b) {
    PolyY r = a;
    std::int64_t e = a.deg() - b.deg() + 1;
    while (!r.is_zero() && r.deg() >= b.deg()) {
        const UniPoly lead = r.lc();
        r = sub_shifted(scale(r, b.lc()), b, lead, r.deg() - b.deg());
        --e;
    }
    if (e > 0) {
        UniPoly f = b.lc().pow(e);
        r = scale(r, f);
    }
    return r;
}

UniPoly content(const PolyY& a) {
    UniPoly g(a.field);
    for (const auto& u : a.c) g = gcd(g, u);
    return g;
}

PolyY divide_content(const PolyY& a, const UniPoly& cont) {
    PolyY r = a;
    for (auto& u : r.c) u = u.exact_div(cont);
    return r;
}

/// Resultant by a primitive PRS with exact bookkeeping of the similarity
/// factors; returns the honest Sylvester resultant.
UniPoly resultant_poly_y(PolyY A, PolyY B) {
    const Field& K = A.field;
    const UniPoly one = UniPoly::constant(K, Coeff::from_int(K, 1));
    if (A.is_zero() || B.is_zero()) throw input_error("resultant of a zero polynomial");
    UniPoly num = one, den = one;
    bool negate = false;
    while (true) {
        if (B.deg() == 0) {
            num = num * B.c[0].pow(A.deg());
            break;
        }
        if (A.deg() == 0) {
            num = num * A.c[0].pow(B.deg());
            break;
        }
        if (A.deg() < B.deg()) {
            if ((A.deg() & 1) && (B.deg() & 1)) negate = !negate;
            std::swap(A, B);
            continue;
        }
        PolyY R = prem(A, B);
        if (R.is_zero()) return UniPoly(K); // common factor
        // Res(A,B) = (-1)^{deg A deg B} Res(B,A)
        //          = (-1)^{..} lc(B)^{deg A - deg R - (deg A - deg B + 1) deg B} Res(B,R)
        if ((A.deg() & 1) && (B.deg() & 1)) negate = !negate;
        const std::int64_t e = A.deg() - R.deg() - (A.deg() - B.deg() + 1) * B.deg();
        if (e >= 0)
            num = num * B.lc().pow(e);
        else
            den = den * B.lc().pow(-e);
        UniPoly cont = content(R);
        if (!cont.is_zero() && cont.degree() >= 1) {
            R = divide_content(R, cont);
            num = num * cont.pow(B.deg());
        }
        A = B;
        B = R;
    }
    UniPoly res = num.exact_div(den);
    return negate ? -res : res;
}

} // namespace

UniPoly resultant_y(const Poly& f, const Poly& g) {
    if (f.field() != g.field()) throw input_error("field mismatch");
    if (f.is_zero() || g.is_zero()) throw input_error("resultant of a zero polynomial");
    if (f.truncation() || g.truncation()) throw input_error("resultant requires exact polynomials");
    if (f.degree_in_y() < 1 || g.degree_in_y() < 1)
        throw input_error("resultant_y requires positive y-degree in both inputs");
    return resultant_poly_y(to_poly_y(f), to_poly_y(g));
}

namespace {

bool lc_in_y_is_constant(const Poly& f) {
    const std::int64_t dy = f.degree_in_y();
    bool found = false;
    for (const auto& [e, c] : f.terms()) {
        if (e.b != dy) continue;
        if (e.a > 0) return false;
        found = true;
    }
    return found;
}

UniPoly restrict_to_x0(const Poly& f) {
    // f(0, y) as a univariate polynomial in y
    UniPoly r(f.field());
    for (const auto& [e, c] : f.terms())
        if (e.a == 0) r.set_coeff(e.b, c);
    return r;
}

bool is_monomial(const UniPoly& u) {
    std::int64_t nz = 0;
    for (const auto& c : u.coeffs())
        if (!c.is_zero()) ++nz;
    return nz == 1;
}

} // namespace

std::int64_t i0_resultant(const Poly& f, const Poly& g) {
    if (f.field() != g.field()) throw input_error("field mismatch");
    if (f.is_zero() || g.is_zero()) throw input_error("i0 of a zero polynomial");
    if (f.truncation() || g.truncation()) throw input_error("i0_resultant requires exact polynomials");
    if (!f.coeff({0, 0}).is_zero() || !g.coeff({0, 0}).is_zero())
        return 0; // one of the curves misses the origin
    const Field& K = f.field();
    // i0 is symmetric under swapping the variables, which doubles the shear
    // budget in tiny prime fields.
    for (int transpose = 0; transpose < 2; ++transpose) {
        const Poly fb = transpose ? f.transposed() : f;
        const Poly gb = transpose ? g.transposed() : g;
        for (int attempt = 0; attempt <= 8; ++attempt) {
            // lambda = 0 first (no shear), then the fixed sequence 1, 2, 3, ...
            const Coeff lambda = Coeff::from_int(K, attempt);
            Poly fs = attempt == 0 ? fb : fb.sheared_x(lambda);
            Poly gs = attempt == 0 ? gb : gb.sheared_x(lambda);
            if (!lc_in_y_is_constant(fs) || !lc_in_y_is_constant(gs)) continue;
            UniPoly f0 = restrict_to_x0(fs), g0 = restrict_to_x0(gs);
            // Common zeros on the line x = 0 must be confined to the origin.
            if (!is_monomial(gcd(f0, g0))) continue;
            UniPoly res = resultant_poly_y(to_poly_y(fs), to_poly_y(gs));
            if (res.is_zero())
                throw input_error("common factor detected (resultant vanishes identically)");
            return res.order();
        }
    }
    throw input_error("no admissible shear found within 8 attempts (small field?)");
}

// ---------------------------------------------------------------------------
// Dimension oracle.

namespace {

std::vector<Exp2> monomials_up_to(std::int64_t bound) {
    std::vector<Exp2> ms;
    for (std::int64_t d = 0; d <= bound; ++d)
        for (std::int64_t a = d; a >= 0; --a) ms.push_back({a, d - a});
    return ms;
}

std::int64_t quotient_dim(const Poly& f, const Poly& g, std::int64_t box) {
    const Field& K = f.field();
    std::vector<Exp2> cols = monomials_up_to(box);
    std::map<Exp2, std::size_t> col_of;
    for (std::size_t i = 0; i < cols.size(); ++i) col_of[cols[i]] = i;

    std::vector<Row> rows;
    for (const Poly* h : {&f, &g}) {
        const std::int64_t ord_h = h->order();
        for (const Exp2& m : cols) {
            if (m.total() + ord_h > box) continue;
            Row row(cols.size(), Coeff(K));
            bool any = false;
            for (const auto& [e, c] : h->terms()) {
                Exp2 prod{e.a + m.a, e.b + m.b};
                if (prod.total() > box) continue;
                row[col_of[prod]] += c;
                any = true;
            }
            if (any) rows.push_back(std::move(row));
        }
    }
    const std::size_t rank = matrix_rank(std::move(rows), K);
    return static_cast<std::int64_t>(cols.size() - rank);
}

} // namespace

std::int64_t i0_dim_oracle(const Poly& f, const Poly& g) {
    if (f.field() != g.field()) throw input_error("field mismatch");
    if (f.is_zero() || g.is_zero()) throw input_error("i0 of a zero polynomial");
    if (f.truncation() || g.truncation()) throw input_error("i0_dim_oracle requires exact polynomials");
    std::int64_t box = 2 * (f.total_degree() + g.total_degree());
    const std::int64_t box_limit = box + 24;
    std::int64_t prev = quotient_dim(f, g, box);
    while (box + 2 <= box_limit) {
        std::int64_t next = quotient_dim(f, g, box + 2);
        if (next == prev) return next;
        prev = next;
        box += 2;
    }
    throw indeterminate_error("quotient dimension did not stabilize within the box limit (" +
                              std::to_string(box_limit) + "); i0 may be infinite");
}

IntMulReport intmul_bound_check(const Poly& f, const Poly& g) {
    NewtonPolygon nf = newton_polygon(f), ng = newton_polygon(g);
    if (!nf.is_convenient() || nf.edges.size() != 1 || !ng.is_convenient() || ng.edges.size() != 1)
        throw input_error("intmul_bound_check requires elementary inputs (convenient, one edge)");
    const Edge S = nf.edges[0], T = ng.edges[0];
    IntMulReport rep{};
    rep.edge_bracket = bracket(S, T);
    rep.parallel = Int(S.h()) * T.v() == Int(S.v()) * T.h();
    rep.forms_coprime = true;
    if (rep.parallel) {
        EdgeForm ef = edge_initial(f, S), eg = edge_initial(g, T);
        UniPoly a = ef.binary_form.stripped_dehomogenized();
        UniPoly b = eg.binary_form.stripped_dehomogenized();
        rep.forms_coprime = gcd(a, b).degree() <= 0;
    }
    rep.i0 = i0_resultant(f, g);
    rep.equality = rep.i0 == rep.edge_bracket;
    const bool expect_equality = !rep.parallel || rep.forms_coprime;
    rep.biconditional_ok = (rep.i0 >= rep.edge_bracket) && (rep.equality == expect_equality);
    return rep;
}

Milnor milnor_number(const Poly& f) {
    if (f.is_zero()) throw input_error("Milnor number of the zero polynomial");
    if (f.truncation()) throw input_error("Milnor number requires an exact polynomial");
    Poly fx = f.partial(Poly::Var::x);
    Poly fy = f.partial(Poly::Var::y);
    if (fx.is_zero() || fy.is_zero())
        return {false, 0, std::string("partial with respect to ") + (fx.is_zero() ? "x" : "y") +
                              " vanishes identically"};
    try {
        return {true, i0_resultant(fx, fy), ""};
    } catch (const input_error& e) {
        if (std::string(e.what()).find("common factor") != std::string::npos)
            return {false, 0, "the partial derivatives share a factor"};
        throw;
    }
}

} // namespace nps
