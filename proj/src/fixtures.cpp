#include "banach_ortho/fixtures.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "banach_ortho/symmetry.hpp"

namespace banach_ortho {

namespace {

constexpr double kPi = std::numbers::pi;

Eigen::VectorXcd vec2(Scalar a, Scalar b) {
  Eigen::VectorXcd v(2);
  v << a, b;
  return v;
}

void claim(FixtureResult& result, const std::string& description,
           double error) {
  result.claims.push_back(FixtureClaim{description, error, error <= 1e-12});
}

void bool_claim(FixtureResult& result, const std::string& description,
                bool holds) {
  claim(result, description, holds ? 0.0 : 1.0);
}

FixtureResult run_prop_basic_c2() {
  FixtureResult result;
  result.name = "prop-basic-c2";
  const PairingOperator T = fixture_operator(result.name);
  const Eigen::VectorXcd x = vec2(0.0, 1.0);
  const Eigen::VectorXcd y = vec2(0.5, Scalar(-1.0 / 3.0, 0.0));
  claim(result, "pairing of (0,1) against (1/2,-1/3) equals 1 - i",
        std::abs(pair(T, x, y) - Scalar(1.0, -1.0)));
  claim(result, "direction component at angle pi/4 vanishes",
        std::abs(pair_theta(T, kPi / 4.0, x, y)));
  const ThetaDirection dir = theta_direction(T, x, y);
  claim(result, "computed vanishing angle is pi/4",
        std::abs(dir.theta - kPi / 4.0) + (dir.any_direction ? 1.0 : 0.0));
  return result;
}

FixtureResult run_direction_example() {
  FixtureResult result;
  result.name = "direction-example";
  const PairingOperator T = fixture_operator(result.name);
  const Eigen::VectorXcd x = vec2(1.0, 0.0);
  claim(result, "(1,0) pairs to zero against itself",
        std::abs(pair(T, x, x)));
  const SymmetryVerdict verdict = analyze_symmetry(T, x);
  bool_claim(result, "(1,0) is left symmetric", verdict.left);
  bool_claim(result, "(1,0) is right symmetric", verdict.right);
  claim(result, "symmetry scalar at (1,0) equals i",
        verdict.lambda ? std::abs(*verdict.lambda - Scalar(0.0, 1.0)) : 1.0);
  bool_claim(result, "angle pi/2 left symmetry fails at (1,0)",
             !is_theta_left_symmetric_at(T, kPi / 2.0, x));
  const Eigen::VectorXcd w = vec2(1.0, Scalar(0.0, 1.0));
  claim(result,
        "witness (1,i): forward angle-pi/2 component 0, reversed component 1",
        std::abs(pair_theta(T, kPi / 2.0, x, w)) +
            std::abs(pair_theta(T, kPi / 2.0, w, x) - 1.0));
  return result;
}

FixtureResult run_nonbijective_l22() {
  FixtureResult result;
  result.name = "nonbijective-l22";
  const PairingOperator T = fixture_operator(result.name);
  bool_claim(result, "operator matrix is rank deficient", !T.bijective);
  const Eigen::VectorXcd x = vec2(1.0, 1.0);
  const SymmetryVerdict verdict = analyze_symmetry(T, x);
  bool_claim(result, "(1,1) is left symmetric", verdict.left);
  bool_claim(result, "(1,1) is not right symmetric", !verdict.right);
  const Eigen::VectorXcd w = vec2(1.0, 0.0);
  claim(result,
        "witness (1,0): pairs to zero against (1,1) while (1,1) pairs to 3",
        std::abs(pair(T, w, x)) + std::abs(pair(T, x, w) - 3.0));
  return result;
}

FixtureResult run_lemma_counterexample() {
  FixtureResult result;
  result.name = "lemma-counterexample";
  const PairingOperator T = fixture_operator(result.name);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  const Eigen::VectorXcd e1 = vec2(1.0, 0.0);
  double forward_err = 0.0;
  double reversed_err = 0.0;
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) {
      const double a = -1.0 + 0.5 * i;
      const double b = -1.0 + 0.5 * j;
      const Eigen::VectorXcd v = vec2(a, b);
      forward_err = std::max(
          forward_err, std::abs(pair(T, v, e1) - Scalar(b * inv_sqrt2, 0.0)));
      reversed_err =
          std::max(reversed_err, std::abs(pair(T, e1, v) - Scalar(b, 0.0)));
    }
  }
  claim(result,
        "on a 5x5 grid, (alpha,beta) pairs against (1,0) to beta/sqrt(2)",
        forward_err);
  claim(result, "on the same grid, (1,0) pairs against (alpha,beta) to beta",
        reversed_err);
  const SymmetryVerdict verdict = analyze_symmetry(T, e1);
  bool_claim(result, "(1,0) is left symmetric", verdict.left);
  claim(result, "symmetry scalar at (1,0) equals sqrt(2)",
        verdict.lambda ? std::abs(*verdict.lambda - Scalar(std::sqrt(2.0), 0.0))
                       : 1.0);
  claim(result, "(1,0) pairs to zero against itself: the scalar is not 1",
        std::abs(pair(T, e1, e1)));
  return result;
}

}  // namespace

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names = {
      "prop-basic-c2", "direction-example", "nonbijective-l22",
      "lemma-counterexample"};
  return names;
}

PairingOperator fixture_operator(const std::string& name) {
  Eigen::MatrixXcd M(2, 2);
  if (name == "prop-basic-c2") {
    M << Scalar(0.0, 7.0), 2.0, 1.0, Scalar(0.0, 3.0);
    return make_pairing(M, ScalarField::Complex);
  }
  if (name == "direction-example") {
    M << 0.0, 1.0, Scalar(0.0, 1.0), Scalar(0.0, 3.0);
    return make_pairing(M, ScalarField::Complex);
  }
  if (name == "nonbijective-l22") {
    M << 1.0, 2.0, -1.0, -2.0;
    return make_pairing(M, ScalarField::Real);
  }
  if (name == "lemma-counterexample") {
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    M << 0.0, inv_sqrt2, 1.0, inv_sqrt2;
    return make_pairing(M, ScalarField::Real);
  }
  throw std::invalid_argument("unknown fixture: " + name);
}

FixtureResult run_fixture(const std::string& name) {
  FixtureResult result;
  if (name == "prop-basic-c2")
    result = run_prop_basic_c2();
  else if (name == "direction-example")
    result = run_direction_example();
  else if (name == "nonbijective-l22")
    result = run_nonbijective_l22();
  else if (name == "lemma-counterexample")
    result = run_lemma_counterexample();
  else
    throw std::invalid_argument("unknown fixture: " + name);
  result.pass = true;
  for (const auto& c : result.claims) result.pass &= c.pass;
  return result;
}

std::vector<FixtureResult> run_all_fixtures() {
  std::vector<FixtureResult> results;
  for (const auto& name : fixture_names()) results.push_back(run_fixture(name));
  return results;
}

}  // namespace banach_ortho
