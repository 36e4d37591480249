#pragma once

#include <string>

#include "hartoric/divisor.hpp"
#include "hartoric/fan.hpp"
#include "hartoric/hartogs.hpp"
#include "hartoric/sheaf_cohomology.hpp"

namespace hartoric {

// JSON shape: {"dim": n, "rays": [[..], ..], "max_cones": [[..], ..]} with
// 0-based ray indices.  Parsing validates the shape and reports the first
// offending key; structural checks are then delegated to Fan::make.
Fan fan_from_json(const std::string& text);
std::string fan_to_json(const Fan& fan);

std::string to_json(const ValidationReport& r);
std::string to_json(const NefCertificate& c);
std::string to_json(const CohomologyTable& t);
std::string to_json(const HirzebruchEvaluation& e);

// {"divisor": [..], "effective": b, "nef": b, "square_zero": b,
//  "polytope_dim": k or "empty", "decision": "..", "basis": "..",
//  "caveats": [..]}
std::string to_json(const HartogsReport& r);

// Inverse of to_json(HartogsReport); validates keys, types, and the
// decision string, throwing std::invalid_argument on any mismatch.
HartogsReport hartogs_report_from_json(const std::string& text);

}  // namespace hartoric
