#include "banach_ortho/json_io.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace banach_ortho {

namespace {

[[noreturn]] void fail(const std::string& msg) {
  throw std::invalid_argument(msg);
}

const json& require(const json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key))
    fail(std::string(what) + ": missing key \"" + key + "\"");
  return j.at(key);
}

int int_field(const json& j, const char* key, const char* what) {
  const json& v = require(j, key, what);
  if (!v.is_number_integer())
    fail(std::string(what) + ": \"" + key + "\" must be an integer");
  return v.get<int>();
}

double number(const json& j, const std::string& what) {
  if (!j.is_number()) fail(what + ": expected a number");
  return j.get<double>();
}

}  // namespace

ScalarField field_from_json(const json& j) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "real") return ScalarField::Real;
    if (s == "complex") return ScalarField::Complex;
  }
  fail("field must be \"real\" or \"complex\"");
}

json scalar_to_json(const Scalar& s, ScalarField field) {
  if (field == ScalarField::Real) return json(s.real());
  return json::array({s.real(), s.imag()});
}

Scalar scalar_from_json(const json& j, ScalarField field) {
  if (j.is_number()) return Scalar(j.get<double>(), 0.0);
  if (field == ScalarField::Complex && j.is_array() && j.size() == 2 &&
      j[0].is_number() && j[1].is_number())
    return Scalar(j[0].get<double>(), j[1].get<double>());
  fail(field == ScalarField::Real
           ? "real entries must be plain numbers"
           : "complex entries must be numbers or [re, im] pairs");
}

PNormSpace space_from_json(const json& j) {
  PNormSpace s;
  s.n = int_field(j, "n", "space");
  if (s.n < 1) fail("space: n must be positive");
  const json& p = require(j, "p", "space");
  if (p.is_string()) {
    if (p.get<std::string>() != "inf") fail("space: p must be a number or \"inf\"");
    s.p = std::numeric_limits<double>::infinity();
  } else {
    s.p = number(p, "space p");
    if (!(s.p >= 1.0)) fail("space: p must satisfy p >= 1");
  }
  s.field = field_from_json(require(j, "field", "space"));
  return s;
}

json space_to_json(const PNormSpace& s) {
  json j;
  j["n"] = s.n;
  if (std::isinf(s.p))
    j["p"] = "inf";
  else
    j["p"] = s.p;
  j["field"] = s.field == ScalarField::Real ? "real" : "complex";
  return j;
}

LoadedVector vector_from_json(const json& j) {
  LoadedVector v;
  v.field = field_from_json(require(j, "field", "vector"));
  const json& entries = require(j, "entries", "vector");
  if (!entries.is_array() || entries.empty())
    fail("vector: entries must be a nonempty array");
  v.entries.resize(static_cast<Eigen::Index>(entries.size()));
  for (std::size_t i = 0; i < entries.size(); ++i)
    v.entries(static_cast<Eigen::Index>(i)) =
        scalar_from_json(entries[i], v.field);
  return v;
}

json vector_to_json(const Eigen::VectorXcd& v, ScalarField field) {
  json entries = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i)
    entries.push_back(scalar_to_json(v(i), field));
  json j;
  j["field"] = field == ScalarField::Real ? "real" : "complex";
  j["entries"] = std::move(entries);
  return j;
}

namespace {

Eigen::MatrixXcd columns_from_json(const json& j, const char* what,
                                   ScalarField field) {
  const int n = int_field(j, "n", what);
  if (n < 1) fail(std::string(what) + ": n must be positive");
  const json& cols = require(j, "columns", what);
  if (!cols.is_array() || cols.size() != static_cast<std::size_t>(n))
    fail(std::string(what) + ": columns must be an array of n columns");
  Eigen::MatrixXcd M(n, n);
  for (int c = 0; c < n; ++c) {
    const json& col = cols[static_cast<std::size_t>(c)];
    if (!col.is_array() || col.size() != static_cast<std::size_t>(n))
      fail(std::string(what) + ": each column must hold n entries");
    for (int r = 0; r < n; ++r)
      M(r, c) = scalar_from_json(col[static_cast<std::size_t>(r)], field);
  }
  return M;
}

json columns_to_json(const Eigen::MatrixXcd& M, ScalarField field) {
  json cols = json::array();
  for (Eigen::Index c = 0; c < M.cols(); ++c) {
    json col = json::array();
    for (Eigen::Index r = 0; r < M.rows(); ++r)
      col.push_back(scalar_to_json(M(r, c), field));
    cols.push_back(std::move(col));
  }
  return cols;
}

}  // namespace

PairingOperator operator_from_json(const json& j) {
  const ScalarField field = field_from_json(require(j, "field", "operator"));
  return make_pairing(columns_from_json(j, "operator", field), field);
}

json operator_to_json(const PairingOperator& T) {
  json j;
  j["n"] = static_cast<int>(T.M.rows());
  j["field"] = T.field == ScalarField::Real ? "real" : "complex";
  j["columns"] = columns_to_json(T.M, T.field);
  return j;
}

EndoOperator endo_from_json(const json& j) {
  const ScalarField field = field_from_json(require(j, "field", "operator"));
  EndoOperator A;
  A.field = field;
  A.A = columns_from_json(j, "operator", field);
  if (!A.A.allFinite()) fail("operator: entries must be finite");
  return A;
}

json endo_to_json(const EndoOperator& A) {
  json j;
  j["n"] = static_cast<int>(A.A.rows());
  j["field"] = A.field == ScalarField::Real ? "real" : "complex";
  j["columns"] = columns_to_json(A.A, A.field);
  return j;
}

json orth_result_to_json(const OrthResult& r, ScalarField field) {
  json j;
  j["verdict"] = r.verdict;
  j["gap"] = r.gap;
  j["witness"] = r.witness ? scalar_to_json(*r.witness, field) : json(nullptr);
  return j;
}

json symmetry_verdict_to_json(const SymmetryVerdict& v) {
  json j;
  j["left"] = v.left;
  j["right"] = v.right;
  j["lambda"] = v.lambda ? json::array({v.lambda->real(), v.lambda->imag()})
                         : json(nullptr);
  j["certificate"] = v.certificate;
  return j;
}

json fit_report_to_json(const FitReport& r) {
  json j;
  j["p"] = r.p;
  j["samples"] = r.samples;
  j["seed"] = r.seed;
  j["residual"] = r.residual;
  j["m_fit"] = columns_to_json(r.m_fit, r.field);
  j["field"] = r.field == ScalarField::Real ? "real" : "complex";
  return j;
}

json halfspace_report_to_json(const HalfspaceReport& r, ScalarField field) {
  json j;
  j["holds"] = r.holds;
  j["phi0"] = r.phi0 ? json(*r.phi0) : json(nullptr);
  if (r.counterexample) {
    json c;
    c["theta"] = r.counterexample->theta;
    c["y"] = vector_to_json(r.counterexample->y, field);
    c["note"] = r.counterexample->note;
    j["counterexample"] = std::move(c);
  } else {
    j["counterexample"] = nullptr;
  }
  return j;
}

json preserve_report_to_json(const PreserveReport& r, ScalarField field) {
  json j;
  j["holds"] = r.holds;
  j["conclusive"] = r.conclusive;
  if (r.counterexample) {
    json c;
    c["x"] = vector_to_json(r.counterexample->x, field);
    c["y"] = vector_to_json(r.counterexample->y, field);
    c["forward"] = r.counterexample->forward;
    c["gap"] = r.counterexample->gap;
    j["counterexample"] = std::move(c);
  } else {
    j["counterexample"] = nullptr;
  }
  return j;
}

json two_dim_report_to_json(const TwoDimReport& r) {
  json conditions = json::array();
  for (const auto& c : r.conditions) {
    json e;
    e["id"] = c.id;
    e["max_violation"] = c.max_violation;
    e["pass"] = c.pass;
    conditions.push_back(std::move(e));
  }
  json j;
  j["all_pass"] = r.all_pass;
  j["conditions"] = std::move(conditions);
  return j;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open file: " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    fail("invalid JSON in " + path + ": " + e.what());
  }
}

}  // namespace banach_ortho
