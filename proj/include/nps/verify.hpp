#ifndef NPS_VERIFY_HPP
#define NPS_VERIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "nps/curve.hpp"
#include "nps/edge_forms.hpp"
#include "nps/invariants.hpp"

namespace nps {

enum class CheckStatus { pass, fail, skipped };

std::string to_string(CheckStatus s);

/// One recorded comparison; `relation` is ">=" or "==" so the pass flag can
/// be recomputed from lhs and rhs.
struct Check {
    std::string name;
    CheckStatus status;
    std::string relation;
    std::int64_t lhs = 0;
    std::int64_t rhs = 0;
    std::string note;
};

struct VerificationReport {
    std::string id;
    std::uint64_t characteristic = 0;
    std::int64_t mu_bar = 0;
    std::int64_t mu_N = 0;
    std::int64_t r_f = 0;
    std::int64_t r_N = 0;
    Rat delta_f;
    Rat delta_N;
    bool nondegenerate = false;
    bool strongly_nondegenerate = false;
    bool edges_only_strong = false;
    MuRoute mu_route = MuRoute::convenient;
    std::optional<std::int64_t> milnor; // empty when infinite or skipped
    bool milnor_infinite = false;
    std::string milnor_note;
    bool expansion_exact = true;
    std::int64_t expansion_bound = 0;
    std::string expanded; // canonical rendering of the expanded product
    PairwiseI0 i0;
    DegeneracyReport degeneracy;
    std::vector<Check> checks;

    bool all_passed() const;
};

/// Run every theorem check on one curve. `trunc_floor` optionally raises the
/// expansion truncation bound.
VerificationReport verify_theorem(const CurveSpec& spec,
                                  std::optional<std::int64_t> trunc_floor = std::nullopt);

} // namespace nps

#endif
