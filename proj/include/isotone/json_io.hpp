#pragma once

#include <json.hpp>

#include "isotone/bestapprox.hpp"
#include "isotone/circular.hpp"
#include "isotone/cone.hpp"
#include "isotone/isotone_check.hpp"
#include "isotone/poset.hpp"
#include "isotone/supnorm.hpp"

namespace isotone::io {

using nlohmann::json;

// Vectors: {"entries": [...], "norm": "sup" | {"p": 2.0}}; "norm" defaults
// to {"p": 2.0} when absent.
json vector_to_json(const RealVector& x);
RealVector vector_from_json(const json& j);

// Cones: {"type": "circular", "axis": [...], "half_angle": r} or
// {"type": "orthant", "dim": n, "norm": ...}.
json cone_to_json(const ConeDescriptor& cone);
ConeDescriptor cone_from_json(const json& j);

json norm_to_json(const Norm& kind);
Norm norm_from_json(const json& j);

json profile_to_json(const sup::ProjectionProfile& p);
json counterexample_to_json(const circular::CounterexampleReport& r);
json isotone_report_to_json(const check::Report& r);

// Posets: {"elements": [...], "leq": [[bool, ...], ...]};
// maps: {"images": {"label": ["label", ...]}}.
order::FinitePoset poset_from_json(const json& j);
order::SetValuedMap setmap_from_json(const json& j, const order::FinitePoset& poset);
json fixpoint_scan_to_json(const order::FixpointScan& scan, const order::FinitePoset& poset);
json theorem_check_to_json(const order::TheoremCheck& check, const order::FinitePoset& poset);

// Monotone maps: {"affine": {"A": [[...]], "b": [...]}} or
// {"componentwise": {"tables": [[[x, y], ...], ...]}}.
approx::MonotoneMap monotone_map_from_json(const json& j);
json monotone_map_to_json(const approx::MonotoneMap& map);

json trace_to_json(const order::IterationTrace& trace, std::size_t max_iterates = 200);
json best_approx_to_json(const approx::BestApproxResult& r);

// Raised as Error(Errc::parse, ...) wrappers around nlohmann exceptions.
json parse_json_text(const std::string& text);

}  // namespace isotone::io
