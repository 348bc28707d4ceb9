#ifndef NPS_SEMIGROUP_HPP
#define NPS_SEMIGROUP_HPP

#include <cstdint>
#include <vector>

#include "nps/errors.hpp"

namespace nps {

/// Numerical semigroup of a plane branch: minimal generators v_0 < ... < v_g
/// with gcd 1, the derived sequences e_i = gcd(v_0..v_i), n_i = e_{i-1}/e_i
/// (each n_i >= 2), and the conductor.
struct Semigroup {
    std::vector<std::int64_t> generators;
    std::vector<std::int64_t> e;
    std::vector<std::int64_t> n; // n[i] corresponds to n_{i+1} in the usual indexing
    std::int64_t conductor = 0;

    std::int64_t g() const { return static_cast<std::int64_t>(generators.size()) - 1; }
    std::int64_t multiplicity() const { return generators.front(); }
    bool contains(std::int64_t v) const;

    friend bool operator==(const Semigroup&, const Semigroup&) = default;
};

/// Extract the minimal system, derive e/n, and compute the conductor by
/// c = sum (n_k - 1) v_k - v_0 + 1; the value is cross-checked against gap
/// enumeration and non-branch generator data is rejected.
Semigroup semigroup_from_generators(const std::vector<std::int64_t>& gens);

/// Conductor by dynamic-programming membership, independent of the formula.
std::int64_t conductor_by_gaps(const Semigroup& s);

/// Puiseux characteristic sequence b_0 < ... < b_g with gcd(b_0..b_k) = e_k,
/// for admissible (n_k v_k < v_{k+1}) branch semigroups; the identity
/// c = sum (e_{k-1} - e_k)(b_k - 1) is verified exactly.
std::vector<std::int64_t> puiseux_sequence(const Semigroup& s);

bool is_admissible(const Semigroup& s);

struct CotaCheck {
    bool bound_holds;          // c >= (v0-1)(v1-1) + gcd(v0,v1) - 1
    bool equality_iff_coprime; // c == (v0-1)(v1-1)  <=>  gcd(v0,v1) == 1
};

CotaCheck cota_check(const Semigroup& s);

/// For an irreducible branch: mu-bar = c - r + 1 = conductor.
std::int64_t mu_bar_branch(const Semigroup& s);

} // namespace nps

#endif
