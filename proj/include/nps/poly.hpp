#ifndef NPS_POLY_HPP
#define NPS_POLY_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nps/field.hpp"
#include "nps/unipoly.hpp"

namespace nps {

/// Lattice exponent pair (alpha, beta) of a monomial x^alpha y^beta.
struct Exp2 {
    std::int64_t a = 0; // exponent of x
    std::int64_t b = 0; // exponent of y
    friend auto operator<=>(const Exp2&, const Exp2&) = default;
    std::int64_t total() const { return a + b; }
};

class Poly;

/// Result of factoring out the maximal dividing monomial x^d1 y^d2.
struct MonomialSplit;

/// Sparse bivariate polynomial or truncated power series with exact
/// coefficients. Stored coefficients are never zero; exponents are
/// nonnegative 64-bit integers and overflow aborts with a clear error.
class Poly {
public:
    Poly() = default;
    explicit Poly(const Field& f) : field_(f) {}

    static Poly zero(const Field& f) { return Poly(f); }
    static Poly constant(const Field& f, const Coeff& c);
    static Poly monomial(const Field& f, const Coeff& c, Exp2 e);

    const Field& field() const { return field_; }
    const std::map<Exp2, Coeff>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    std::optional<std::int64_t> truncation() const { return trunc_; }
    void set_truncation(std::optional<std::int64_t> t);
    Poly truncated(std::int64_t bound) const;

    Coeff coeff(Exp2 e) const;
    void add_term(Exp2 e, const Coeff& c); // accumulates; drops zeros

    /// Largest stored total degree (input must be nonzero).
    std::int64_t total_degree() const;
    std::int64_t degree_in_y() const;
    std::int64_t degree_in_x() const;

    /// min{alpha+beta : c_{alpha beta} != 0}. Errors on zero input; an
    /// identically-truncated-to-zero series is indeterminate.
    std::int64_t order() const;

    /// Sum of the terms of total degree order().
    Poly initial_part() const;

    /// f = x^d1 y^d2 g with d1, d2 maximal; g is convenient or a unit.
    MonomialSplit extract_monomial() const;

    /// f(x,0) != 0 and f(0,y) != 0 (equivalently both offsets are zero).
    bool is_convenient() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly scaled(const Coeff& c) const;
    Poly shifted(std::int64_t dx, std::int64_t dy) const;

    friend bool operator==(const Poly& a, const Poly& b);
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
    /// Equality of the stored terms, ignoring truncation markers.
    bool same_terms(const Poly& o) const { return field_ == o.field_ && terms_ == o.terms_; }

    enum class Var { x, y };
    /// Formal partial derivative; may vanish identically in characteristic p.
    Poly partial(Var v) const;

    /// f(x + lambda*y, y) — the shear used to reach y-regular position.
    Poly sheared_x(const Coeff& lambda) const;
    /// f(y, x).
    Poly transposed() const;

    /// Coefficients of f as a polynomial in y (index = y-exponent).
    std::vector<UniPoly> y_coefficients() const;
    /// f(series in x only): substitute a univariate polynomial for each variable.
    static Poly from_y_coefficients(const Field& f, const std::vector<UniPoly>& ys);

    std::string str() const; // canonical rendering, see parse.hpp

private:
    void check_field(const Poly& o) const;
    void apply_truncation();

    Field field_;
    std::map<Exp2, Coeff> terms_;
    std::optional<std::int64_t> trunc_;
};

struct MonomialSplit {
    std::int64_t d1;
    std::int64_t d2;
    Poly cofactor;
};

/// Product with all terms of total degree > bound dropped; the result carries
/// truncation_degree = bound.
Poly multiply_truncated(const Poly& f, const Poly& g, std::int64_t bound);

/// Composite series f(x(t), y(t)) modulo t^{bound+1}. Parametrizations must
/// have positive order (or be zero).
UniPoly substitute_param(const Poly& f, const UniPoly& xt, const UniPoly& yt, std::int64_t bound);

/// Checked exponent arithmetic.
std::int64_t checked_add_exp(std::int64_t a, std::int64_t b);

} // namespace nps

#endif
