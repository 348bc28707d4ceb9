#ifndef NPS_CURVE_HPP
#define NPS_CURVE_HPP

#include <optional>
#include <string>
#include <vector>

#include "nps/branch.hpp"
#include "nps/poly.hpp"
#include "nps/semigroup.hpp"

namespace nps {

/// One branch of a corpus curve: a normalized parametrization, or an
/// explicit value semigroup (wild branches), each optionally with the
/// irreducible polynomial factor it contributes to the product.
struct BranchSpec {
    std::optional<UniPoly> xt;
    std::optional<UniPoly> yt;
    std::optional<std::vector<std::int64_t>> semigroup_gens;
    std::optional<Poly> factor;

    bool has_param() const { return xt.has_value(); }
};

struct CurveSpec {
    std::string id;
    Field field;
    std::vector<BranchSpec> branches;
    /// Optional user-supplied symmetric matrix of pairwise i0 values.
    std::optional<std::vector<std::vector<std::int64_t>>> i0_matrix;
};

/// Minimal-degree polynomial vanishing on the parametrized branch, found by
/// exact linear algebra on total degrees D = 1, 2, ...; the kernel at the
/// minimal D is one-dimensional for a primitive parametrization.
Poly implicitize(const UniPoly& xt, const UniPoly& yt, std::int64_t degree_cap = 16);

/// Scale to a canonical representative: monic leading term over F_p; over Q,
/// primitive integer coefficients with positive leading term (leading = last
/// in the (total degree, alpha) term order).
Poly normalize_factor(const Poly& f);

struct ResolvedBranch {
    Semigroup semigroup;
    std::int64_t mu_bar; // conductor
    Poly factor;         // normalized
    std::string factor_provenance; // "user" | "implicitized" | "axis"
    std::optional<UniPoly> xt, yt;
    std::vector<std::int64_t> beta; // characteristic exponents when parametrized & tame
};

ResolvedBranch resolve_branch(const BranchSpec& b, const Field& field);

struct PairwiseI0 {
    std::vector<std::vector<std::int64_t>> value;      // symmetric, diagonal unused (0)
    std::vector<std::vector<std::string>> provenance;  // "user" | "param" | "resultant"
};

/// Resolution order per entry: user matrix, then the t-order of branch i's
/// parametrization in branch j's factor, then the resultant route.
PairwiseI0 pairwise_i0(const CurveSpec& spec, const std::vector<ResolvedBranch>& branches);

/// mu-bar(f) = sum mu-bar(g_i) + 2 sum_{i<j} i0(g_i, g_j) - (s - 1).
std::int64_t mu_bar_curve(const std::vector<ResolvedBranch>& branches, const PairwiseI0& i0);

struct ExpandedCurve {
    Poly poly;              // exact product when it fits the bound, else truncated
    std::int64_t bound;     // truncation bound used for the stability check
    bool exact;
};

/// Product of the branch factors. The truncation bound starts at
/// 2*(sum of conductors + sum of pairwise i0) + 6 and the polygon is required
/// to be identical at twice the bound (escalating once).
ExpandedCurve expand_curve(const std::vector<ResolvedBranch>& branches, const PairwiseI0& i0,
                           std::optional<std::int64_t> bound_floor = std::nullopt);

} // namespace nps

#endif
