#ifndef NPS_EDGE_FORMS_HPP
#define NPS_EDGE_FORMS_HPP

#include <cstdint>
#include <vector>

#include "nps/newton.hpp"

namespace nps {

/// Homogeneous binary form F(u,v); c[i] is the coefficient of u^{d-i} v^i.
class BinaryForm {
public:
    BinaryForm(const Field& f, std::vector<Coeff> c);

    const Field& field() const { return field_; }
    std::int64_t degree() const { return static_cast<std::int64_t>(c_.size()) - 1; }
    bool is_zero() const;
    const std::vector<Coeff>& coeffs() const { return c_; }
    Coeff coeff(std::int64_t i) const { return c_[static_cast<std::size_t>(i)]; }

    std::int64_t mult_u() const; // multiplicity of the factor u
    std::int64_t mult_v() const;

    BinaryForm du() const;           // dF/du
    BinaryForm dv() const;
    BinaryForm u_du() const;         // u * dF/du, degree preserved
    BinaryForm v_dv() const;
    BinaryForm plus_scaled(const BinaryForm& o, const Coeff& s) const;
    BinaryForm scaled(const Coeff& s) const;

    /// F with all u- and v-factors stripped, dehomogenized at u = 1; the
    /// result has nonzero constant term and degree = deg F - mult_u - mult_v.
    UniPoly stripped_dehomogenized() const;

    friend bool operator==(const BinaryForm& a, const BinaryForm& b) {
        return a.field_ == b.field_ && a.c_ == b.c_;
    }

private:
    Field field_;
    std::vector<Coeff> c_;
};

struct SquarefreeResult {
    bool squarefree;
    /// Multiplicities of the distinct projective roots over the closure
    /// (axis roots u=0, v=0 included), weakly increasing.
    std::vector<std::int64_t> multiplicities;
    std::int64_t distinct_roots() const { return static_cast<std::int64_t>(multiplicities.size()); }
};

/// Squarefree over the closure, decided by gcd(F, F_u, F_v) with the p-th
/// power special case; the multiset comes from squarefree decomposition and
/// never constructs roots.
SquarefreeResult binary_form_squarefree(const BinaryForm& F);

/// in(f,S) = x^{alpha_S} y^{beta_S} * reduced_part, and the degree-d form F
/// with reduced_part = F(x^{m/d}, y^{n/d}), (m,n) the bidegree, d = gcd(m,n).
struct EdgeForm {
    Edge edge;
    Poly in_form;
    std::int64_t alpha_S;
    std::int64_t beta_S;
    Poly reduced_part;
    std::int64_t m; // bidegree of reduced part = (|S|_1, |S|_2)
    std::int64_t n;
    std::int64_t d; // gcd(m, n)
    BinaryForm binary_form;
};

EdgeForm edge_initial(const Poly& f, const Edge& S);

struct EdgeDegeneracy {
    Edge edge;
    bool squarefree;
    std::int64_t distinct_factors;
    std::vector<std::int64_t> multiplicity_pattern;
    bool torus_critical; // the strong-sense system has a solution off the axes
};

struct VertexDegeneracy {
    Exp2 vertex;
    bool torus_critical;
};

struct DegeneracyReport {
    bool nondegenerate;            // every edge form squarefree
    bool strongly_nondegenerate;   // edges and vertices pass the torus test
    bool edges_only_strong;        // the same test quantified over edges only
    std::vector<EdgeDegeneracy> per_edge;
    std::vector<VertexDegeneracy> per_vertex;
};

DegeneracyReport analyze_degeneracy(const Poly& f);
bool is_nondegenerate(const Poly& f);
bool is_strongly_nondegenerate(const Poly& f);

struct EdgeFactorData {
    std::int64_t bidegree_h;
    std::int64_t bidegree_v;
    std::int64_t r;
    std::int64_t distinct_factor_count;
};

/// Combinatorial data of the Newton factor attached to edge S: its bidegree,
/// lattice length, and the number of distinct projective roots of the edge form.
EdgeFactorData edge_factor_data(const Poly& f, const Edge& S);

} // namespace nps

#endif
