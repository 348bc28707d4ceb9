#ifndef NPS_JSON_IO_HPP
#define NPS_JSON_IO_HPP

#include <json.hpp>

#include "nps/corpus.hpp"
#include "nps/semigroup.hpp"
#include "nps/verify.hpp"

namespace nps {

using json = nlohmann::json;

json polygon_to_json(const NewtonPolygon& n);
json degeneracy_to_json(const DegeneracyReport& d);
json invariants_to_json(const PolygonInvariants& inv);
json semigroup_to_json(const Semigroup& s);
json report_to_json(const VerificationReport& r); // schema version "v1"

json curve_spec_to_json(const CurveSpec& spec);
CurveSpec curve_spec_from_json(const json& j);

/// A corpus file is a JSON array of curve specs; a single spec object is
/// accepted as a one-element corpus.
std::vector<CurveSpec> corpus_from_json(const json& j);
json corpus_to_json(const std::vector<CurveSpec>& specs);

/// Exact rationals render as integers when integral, else as "p/q" strings.
json rat_to_json(const Rat& r);

} // namespace nps

#endif
