#pragma once

#include <string>

#include <json.hpp>

#include "banach_ortho/preserve.hpp"
#include "banach_ortho/symmetry.hpp"

namespace banach_ortho {

using nlohmann::json;

// Wire formats. Complex scalars are two-element [re, im] arrays; real-field
// entries are plain numbers. p serializes as a number or the string "inf".
//   PNormSpace      {"n": int, "p": number | "inf", "field": "real"|"complex"}
//   Vector          {"field": ..., "entries": [..]}
//   PairingOperator {"n": int, "field": ..., "columns": [[..], ..]}
// Malformed input throws std::invalid_argument with a diagnostic message.

struct LoadedVector {
  Eigen::VectorXcd entries;
  ScalarField field = ScalarField::Real;
};

ScalarField field_from_json(const json& j);

json scalar_to_json(const Scalar& s, ScalarField field);
Scalar scalar_from_json(const json& j, ScalarField field);

PNormSpace space_from_json(const json& j);
json space_to_json(const PNormSpace& s);

LoadedVector vector_from_json(const json& j);
json vector_to_json(const Eigen::VectorXcd& v, ScalarField field);

PairingOperator operator_from_json(const json& j);
json operator_to_json(const PairingOperator& T);

EndoOperator endo_from_json(const json& j);
json endo_to_json(const EndoOperator& A);

json orth_result_to_json(const OrthResult& r, ScalarField field);
json symmetry_verdict_to_json(const SymmetryVerdict& v);
json fit_report_to_json(const FitReport& r);
json halfspace_report_to_json(const HalfspaceReport& r, ScalarField field);
json preserve_report_to_json(const PreserveReport& r, ScalarField field);
json two_dim_report_to_json(const TwoDimReport& r);

json load_json_file(const std::string& path);

}  // namespace banach_ortho
