#pragma once

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "fflab/polynomial.hpp"
#include "fflab/roots.hpp"
#include "fflab/verify.hpp"

namespace fflab::io {

using nlohmann::json;

// A polynomial read from {"roots": [...]} or {"coeffs": [c0, ..., cn]}, c0 leading.
// When the roots were given they are kept, so root-side quantities skip the
// coefficient round trip.
struct PolyInput {
  Polynomial poly;
  std::optional<RootVector> roots;

  // The given roots, or real_roots(poly).
  RootVector root_vector() const;
};

// Throws std::invalid_argument on anything malformed (bad JSON, both or neither key,
// non-numeric or non-finite entries, zero leading coefficient, empty list).
PolyInput parse_polynomial(const json& j);
PolyInput parse_polynomial(const std::string& text);

json coeffs_json(const Polynomial& p);  // {"coeffs": plain descending}
json roots_json(const RootVector& r);   // {"roots": [...]}

// Field names follow CheckReport; NaN and infinities are written as null.
json report_json(const CheckReport& r);
CheckReport parse_report(const json& j);
json config_json(const TrialConfig& c);
TrialConfig parse_config(const json& j);

// One row per entry: suite,trial,margin,skipped. Skipped rows have an empty margin.
std::string reports_csv(const std::vector<CheckReport>& reports);

}  // namespace fflab::io
