#ifndef NPS_CORPUS_HPP
#define NPS_CORPUS_HPP

#include <cstdint>
#include <vector>

#include "nps/curve.hpp"

namespace nps {

/// Deterministic pseudo-random corpus of curve specs: products of 1-4
/// pairwise-distinct branches drawn from tame parametrization templates
/// (pure-power and two-term cusps, smooth branches), optional axis factors
/// x and y, and wild pure-power branches entered through their semigroups in
/// positive characteristic. The same (seed, count, chars) always produces
/// the same corpus; sampling uses std::mt19937_64 with plain modulo draws.
std::vector<CurveSpec> generate_corpus(std::uint64_t seed, std::size_t count,
                                       const std::vector<std::uint64_t>& chars);

} // namespace nps

#endif
