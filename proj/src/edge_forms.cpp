#include "nps/edge_forms.hpp"

#include <algorithm>
#include <numeric>

namespace nps {

BinaryForm::BinaryForm(const Field& f, std::vector<Coeff> c) : field_(f), c_(std::move(c)) {
    if (c_.empty()) throw input_error("empty binary form");
}

bool BinaryForm::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Coeff& c) { return c.is_zero(); });
}

std::int64_t BinaryForm::mult_u() const {
    for (std::int64_t i = degree(); i >= 0; --i)
        if (!c_[static_cast<std::size_t>(i)].is_zero()) return degree() - i;
    throw input_error("multiplicity in the zero form");
}

std::int64_t BinaryForm::mult_v() const {
    for (std::int64_t i = 0; i <= degree(); ++i)
        if (!c_[static_cast<std::size_t>(i)].is_zero()) return i;
    throw input_error("multiplicity in the zero form");
}

BinaryForm BinaryForm::du() const {
    if (degree() == 0) return BinaryForm(field_, {Coeff(field_)});
    std::vector<Coeff> r(c_.size() - 1, Coeff(field_));
    for (std::size_t i = 0; i + 1 < c_.size(); ++i)
        r[i] = c_[i].times_int(Int(degree() - static_cast<std::int64_t>(i)));
    return BinaryForm(field_, std::move(r));
}

BinaryForm BinaryForm::dv() const {
    if (degree() == 0) return BinaryForm(field_, {Coeff(field_)});
    std::vector<Coeff> r(c_.size() - 1, Coeff(field_));
    for (std::size_t i = 1; i < c_.size(); ++i)
        r[i - 1] = c_[i].times_int(Int(i));
    return BinaryForm(field_, std::move(r));
}

BinaryForm BinaryForm::u_du() const {
    std::vector<Coeff> r(c_.size(), Coeff(field_));
    for (std::size_t i = 0; i < c_.size(); ++i)
        r[i] = c_[i].times_int(Int(degree() - static_cast<std::int64_t>(i)));
    return BinaryForm(field_, std::move(r));
}

BinaryForm BinaryForm::v_dv() const {
    std::vector<Coeff> r(c_.size(), Coeff(field_));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i].times_int(Int(i));
    return BinaryForm(field_, std::move(r));
}

BinaryForm BinaryForm::plus_scaled(const BinaryForm& o, const Coeff& s) const {
    if (degree() != o.degree()) throw internal_error("binary form degree mismatch");
    std::vector<Coeff> r = c_;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += o.c_[i] * s;
    return BinaryForm(field_, std::move(r));
}

BinaryForm BinaryForm::scaled(const Coeff& s) const {
    std::vector<Coeff> r = c_;
    for (auto& x : r) x *= s;
    return BinaryForm(field_, std::move(r));
}

UniPoly BinaryForm::stripped_dehomogenized() const {
    const std::int64_t b = mult_v(), a = mult_u();
    std::vector<Coeff> r;
    for (std::int64_t i = b; i <= degree() - a; ++i)
        r.push_back(c_[static_cast<std::size_t>(i)]);
    return UniPoly(field_, std::move(r));
}

SquarefreeResult binary_form_squarefree(const BinaryForm& F) {
    if (F.is_zero()) throw input_error("squarefree test of the zero form");
    if (F.degree() < 1) throw input_error("squarefree test needs degree >= 1");
    const std::uint64_t p = F.field().characteristic();

    // gcd(F, F_u, F_v) over the closure: axis multiplicities are tracked
    // separately, the rest goes through the dehomogenized univariate gcd.
    BinaryForm Fu = F.du(), Fv = F.dv();
    bool gcd_constant;
    if (Fu.is_zero() && Fv.is_zero()) {
        // Every exponent divisible by p: F is a p-th power.
        (void)p;
        gcd_constant = false;
    } else {
        const std::int64_t a = F.mult_u(), b = F.mult_v();
        UniPoly g = F.stripped_dehomogenized();
        UniPoly acc = g;
        std::int64_t common_a = a, common_b = b;
        for (const BinaryForm* D : {&Fu, &Fv}) {
            if (D->is_zero()) continue;
            common_a = std::min(common_a, D->mult_u());
            common_b = std::min(common_b, D->mult_v());
            acc = gcd(acc, D->stripped_dehomogenized());
        }
        gcd_constant = (common_a == 0 && common_b == 0 && acc.degree() <= 0);
    }

    SquarefreeResult out;
    const std::int64_t a = F.mult_u(), b = F.mult_v();
    if (a > 0) out.multiplicities.push_back(a);
    if (b > 0) out.multiplicities.push_back(b);
    UniPoly g = F.stripped_dehomogenized();
    if (g.degree() >= 1)
        for (const auto& [m, s] : squarefree_decomposition(g))
            for (std::int64_t i = 0; i < s.degree(); ++i) out.multiplicities.push_back(m);
    std::sort(out.multiplicities.begin(), out.multiplicities.end());

    out.squarefree = gcd_constant;
    const bool all_simple =
        std::all_of(out.multiplicities.begin(), out.multiplicities.end(),
                    [](std::int64_t m) { return m == 1; });
    if (out.squarefree != all_simple)
        throw internal_error("squarefree criterion disagrees with the multiplicity pattern");
    return out;
}

EdgeForm edge_initial(const Poly& f, const Edge& S) {
    NewtonPolygon n = newton_polygon(f);
    if (std::find(n.edges.begin(), n.edges.end(), S) == n.edges.end())
        throw input_error("segment is not an edge of the Newton polygon of f");

    Poly in(f.field());
    for (const auto& [e, c] : f.terms()) {
        const Int cross = Int(S.end.a - S.start.a) * (e.b - S.start.b) -
                          Int(S.end.b - S.start.b) * (e.a - S.start.a);
        if (cross == 0 && e.a >= S.start.a && e.a <= S.end.a) in.add_term(e, c);
    }
    auto split = in.extract_monomial();
    EdgeForm ef{S, in, split.d1, split.d2, split.cofactor,
                S.h(), S.v(), std::gcd(S.h(), S.v()),
                BinaryForm(f.field(), {Coeff(f.field())})};
    if (split.d1 != S.start.a || split.d2 != S.end.b)
        throw internal_error("edge form strip offsets disagree with the edge endpoints");
    const std::int64_t mh = ef.m / ef.d, nh = ef.n / ef.d;
    std::vector<Coeff> c(static_cast<std::size_t>(ef.d) + 1, Coeff(f.field()));
    for (const auto& [e, v] : ef.reduced_part.terms()) {
        if (e.a % mh != 0) throw internal_error("edge support point off the quasi-homogeneous lattice");
        const std::int64_t j = e.a / mh;
        if (j < 0 || j > ef.d || e.b != ef.n - j * nh)
            throw internal_error("edge support point off the edge segment");
        c[static_cast<std::size_t>(ef.d - j)] = v; // coefficient of u^j v^{d-j}
    }
    ef.binary_form = BinaryForm(f.field(), std::move(c));
    return ef;
}

namespace {

/// Does the edge's initial form have a critical point with both coordinates
/// nonzero? Decided from P = a F + (m/d) u F_u and Q = b F + (n/d) v F_v.
bool edge_torus_critical(const EdgeForm& ef) {
    const Field& K = ef.binary_form.field();
    const Coeff ca = Coeff::from_int(K, ef.alpha_S);
    const Coeff cb = Coeff::from_int(K, ef.beta_S);
    const Coeff cm = Coeff::from_int(K, ef.m / ef.d);
    const Coeff cn = Coeff::from_int(K, ef.n / ef.d);
    BinaryForm P = ef.binary_form.scaled(ca).plus_scaled(ef.binary_form.u_du(), cm);
    BinaryForm Q = ef.binary_form.scaled(cb).plus_scaled(ef.binary_form.v_dv(), cn);
    const bool pz = P.is_zero(), qz = Q.is_zero();
    if (pz && qz) return true; // every torus point is critical
    if (pz) return Q.stripped_dehomogenized().degree() >= 1;
    if (qz) return P.stripped_dehomogenized().degree() >= 1;
    return gcd(P.stripped_dehomogenized(), Q.stripped_dehomogenized()).degree() >= 1;
}

bool vertex_torus_critical(const Field& K, const Exp2& v) {
    const std::uint64_t p = K.characteristic();
    if (p == 0) return v.a == 0 && v.b == 0; // impossible for series without constant term
    return v.a % static_cast<std::int64_t>(p) == 0 && v.b % static_cast<std::int64_t>(p) == 0;
}

} // namespace

DegeneracyReport analyze_degeneracy(const Poly& f) {
    if (f.is_zero()) throw input_error("degeneracy of the zero series");
    if (f.order() < 1) throw input_error("degeneracy analysis needs order >= 1");
    NewtonPolygon n = newton_polygon(f);
    DegeneracyReport rep;
    rep.nondegenerate = true;
    rep.edges_only_strong = true;
    for (const Edge& S : n.edges) {
        EdgeForm ef = edge_initial(f, S);
        SquarefreeResult sf = binary_form_squarefree(ef.binary_form);
        bool torus = edge_torus_critical(ef);
        rep.per_edge.push_back({S, sf.squarefree, sf.distinct_roots(), sf.multiplicities, torus});
        rep.nondegenerate = rep.nondegenerate && sf.squarefree;
        rep.edges_only_strong = rep.edges_only_strong && !torus;
    }
    bool vertices_ok = true;
    for (const Exp2& v : n.vertices) {
        bool torus = vertex_torus_critical(f.field(), v);
        rep.per_vertex.push_back({v, torus});
        vertices_ok = vertices_ok && !torus;
    }
    rep.strongly_nondegenerate = rep.edges_only_strong && vertices_ok;
    return rep;
}

bool is_nondegenerate(const Poly& f) { return analyze_degeneracy(f).nondegenerate; }

bool is_strongly_nondegenerate(const Poly& f) { return analyze_degeneracy(f).strongly_nondegenerate; }

EdgeFactorData edge_factor_data(const Poly& f, const Edge& S) {
    EdgeForm ef = edge_initial(f, S);
    if (ef.d != S.lattice_length())
        throw internal_error("form degree disagrees with the edge lattice length");
    if (ef.binary_form.mult_u() != 0 || ef.binary_form.mult_v() != 0)
        throw internal_error("edge form of a convenient reduced part has an axis factor");
    UniPoly g = ef.binary_form.stripped_dehomogenized();
    return {ef.m, ef.n, ef.d, distinct_root_count(g)};
}

} // namespace nps
