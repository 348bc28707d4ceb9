#ifndef NPS_INTERSECT_HPP
#define NPS_INTERSECT_HPP

#include <optional>
#include <string>

#include "nps/newton.hpp"
#include "nps/poly.hpp"

namespace nps {

/// ord_t g(x(t), y(t)); realizes i_0 for a parametrized branch. Throws
/// indeterminate_error if g vanishes to order > bound (possible common
/// component).
std::int64_t i0_param(const UniPoly& xt, const UniPoly& yt, const Poly& g, std::int64_t bound);

/// Sylvester resultant eliminating y, exact (up to the usual sign convention
/// of the Sylvester matrix with the rows of f first). Inputs must be exact
/// polynomials of positive y-degree.
UniPoly resultant_y(const Poly& f, const Poly& g);

/// i_0(f, g) as the x-order of Res_y after an (at most 8-attempt) deterministic
/// shear x -> x + lambda*y that makes both inputs y-regular with constant
/// leading coefficient and confines common zeros on x = 0 to the origin.
std::int64_t i0_resultant(const Poly& f, const Poly& g);

/// dim_K K[[x,y]]/(f,g) by exact rank computation on truncated monomial
/// spaces, stabilized over an increasing box.
std::int64_t i0_dim_oracle(const Poly& f, const Poly& g);

struct IntMulReport {
    std::int64_t i0;
    std::int64_t edge_bracket; // [S,T]
    bool parallel;
    bool forms_coprime;     // meaningful when parallel: In f, In g share no root off the axes
    bool equality;          // i0 == [S,T]
    bool biconditional_ok;  // equality  <=>  (!parallel || forms_coprime)
};

/// Check the edge bound i0(f,g) >= [S,T] and its equality case for two
/// elementary (convenient, single-edge) series.
IntMulReport intmul_bound_check(const Poly& f, const Poly& g);

struct Milnor {
    bool finite;
    std::int64_t value;      // when finite
    std::string note;        // reason when infinite
};

/// i_0 of the two partials; infinite when a partial vanishes identically or
/// the partials share a factor.
Milnor milnor_number(const Poly& f);

} // namespace nps

#endif
