#ifndef NPS_INVARIANTS_HPP
#define NPS_INVARIANTS_HPP

#include <string>

#include "nps/newton.hpp"

namespace nps {

/// Which formula produced mu_N.
enum class MuRoute {
    convenient,          // offsets (0,0)
    offset_x,            // f = x*g
    offset_y,            // f = y*g
    offset_xy,           // f = xy*g
    stabilized_monomial, // f is a monomial times a unit
};

std::string to_string(MuRoute r);

struct PolygonInvariants {
    std::int64_t mu_N;
    Rat delta_N;        // (mu_N + r_N - 1)/2, an integer for reduced input
    std::int64_t r_N;
    MuRoute route;
};

/// [N,N] - |N|_1 - |N|_2 + 1 for a convenient polygon with at least one edge.
std::int64_t mu_N_convenient(const NewtonPolygon& n);

/// Four-case closed formula for f = x^{d1} y^{d2} g reduced (d1, d2 <= 1).
/// A pure monomial (g a unit) is evaluated by stabilization.
std::int64_t mu_N_general(const Poly& f);
std::int64_t mu_N_general(const Poly& f, MuRoute& route_out);

/// mu_N of f + x^m + y^m for m past stabilization; errors if the value does
/// not settle within the doubling window.
std::int64_t mu_N_stabilized(const Poly& f);

/// 2*A1 + m1 + n1 - 1 where (m1,1), (1,n1) are the rational intersections of
/// the supporting chain with the lines beta=1 and alpha=1. Requires order >= 2.
std::int64_t mu_N_lenarcik(const Poly& f);

/// mu via the general formula, r from the polygon, delta from
/// 2*delta = mu + r - 1; cross-checked against lattice counts when convenient.
PolygonInvariants invariants_bundle(const Poly& f);

} // namespace nps

#endif
