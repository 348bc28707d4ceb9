#ifndef NPS_BRANCH_HPP
#define NPS_BRANCH_HPP

#include <optional>
#include <vector>

#include "nps/semigroup.hpp"
#include "nps/unipoly.hpp"

namespace nps {

/// Characteristic exponents and value semigroup of a parametrized branch.
struct CharExponents {
    std::vector<std::int64_t> beta; // beta_0 = n, then the gcd-dropping exponents of y(t)
    Semigroup semigroup;
    bool smooth() const { return beta.size() == 1 && beta[0] == 1; }
};

/// Classical dictionary for tame branches in normal form: x = t^n exactly
/// (p does not divide n), ord y >= n. The axis branches (t, 0) and (0, t)
/// are accepted and give the trivial semigroup <1>.
///
/// Rejected inputs: wild branches (p | n, supply the semigroup instead),
/// x(t) not a pure power, ord y < ord x, non-primitive parametrizations.
CharExponents char_exponents_from_param(const UniPoly& xt, const UniPoly& yt);

/// v_0 = beta_0, v_1 = beta_1, v_{k+1} = n_k v_k + beta_{k+1} - beta_k.
std::vector<std::int64_t> semigroup_generators_from_exponents(const std::vector<std::int64_t>& beta);

} // namespace nps

#endif
