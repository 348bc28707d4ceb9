#ifndef NPS_UNIPOLY_HPP
#define NPS_UNIPOLY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nps/field.hpp"

namespace nps {

/// Dense univariate polynomial, or truncated power series when
/// `truncation_degree` is set (terms of higher degree are unknown, not zero).
/// Coefficient index = exponent; trailing zeros are trimmed.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(const Field& f) : field_(f) {}
    UniPoly(const Field& f, std::vector<Coeff> coeffs);

    static UniPoly zero(const Field& f) { return UniPoly(f); }
    static UniPoly constant(const Field& f, const Coeff& c);
    static UniPoly monomial(const Field& f, const Coeff& c, std::int64_t exp);

    const Field& field() const { return field_; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    /// Degree of the stored part; -1 for the zero polynomial.
    std::int64_t degree() const { return static_cast<std::int64_t>(c_.size()) - 1; }

    /// Least exponent with nonzero coefficient. Throws input_error on the
    /// exact zero polynomial and indeterminate_error on a series whose stored
    /// part is empty but truncated (the order may hide beyond the bound).
    std::int64_t order() const;

    Coeff coeff(std::int64_t exp) const;
    Coeff lc() const;
    void set_coeff(std::int64_t exp, const Coeff& c);

    std::optional<std::int64_t> truncation() const { return trunc_; }
    void set_truncation(std::optional<std::int64_t> t);
    /// Drop terms of degree > bound and mark the series truncated at bound.
    UniPoly truncated(std::int64_t bound) const;

    UniPoly operator-() const;
    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    UniPoly scaled(const Coeff& c) const;

    friend bool operator==(const UniPoly& a, const UniPoly& b);
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    UniPoly derivative() const;
    UniPoly monic() const;
    UniPoly pow(std::int64_t e) const;

    /// Exact polynomial division; throws internal_error if not divisible.
    UniPoly exact_div(const UniPoly& d) const;
    /// Euclidean division over the coefficient field: returns (q, r).
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const;

    /// Substitute z -> z^k.
    UniPoly inflate(std::int64_t k) const;
    /// Inverse of inflate; requires support contained in k*Z.
    UniPoly deflate(std::int64_t k) const;

    const std::vector<Coeff>& coeffs() const { return c_; }
    std::string str(const std::string& var = "t") const;

private:
    void trim();
    void check_field(const UniPoly& o) const;

    Field field_;
    std::vector<Coeff> c_;
    std::optional<std::int64_t> trunc_;
};

/// Monic gcd over the coefficient field (Euclid). Requires exact inputs.
UniPoly gcd(const UniPoly& a, const UniPoly& b);

/// Squarefree decomposition f = lc * prod s_m^m with the s_m monic,
/// squarefree and pairwise coprime; valid in characteristic 0 and p
/// (Musser's algorithm with the p-th power descent). Returned as
/// (multiplicity, factor) pairs with multiplicities increasing.
std::vector<std::pair<std::int64_t, UniPoly>> squarefree_decomposition(const UniPoly& f);

/// Number of distinct roots of f in the algebraic closure.
std::int64_t distinct_root_count(const UniPoly& f);

} // namespace nps

#endif
