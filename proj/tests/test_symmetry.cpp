#include <doctest.h>

#include <cmath>
#include <numbers>

#include "banach_ortho/fixtures.hpp"
#include "banach_ortho/symmetry.hpp"

using namespace banach_ortho;

namespace {

constexpr double kPi = std::numbers::pi;

Eigen::VectorXcd vec(std::initializer_list<Scalar> entries) {
  Eigen::VectorXcd v(static_cast<Eigen::Index>(entries.size()));
  Eigen::Index i = 0;
  for (const Scalar& s : entries) v(i++) = s;
  return v;
}

PairingOperator pairing(std::initializer_list<std::initializer_list<Scalar>>
                            rows,
                        ScalarField field) {
  const auto n = static_cast<Eigen::Index>(rows.size());
  Eigen::MatrixXcd M(n, n);
  Eigen::Index r = 0;
  for (const auto& row : rows) {
    Eigen::Index c = 0;
    for (const Scalar& s : row) M(r, c++) = s;
    ++r;
  }
  return make_pairing(M, field);
}

}  // namespace

TEST_CASE("reversed functional is the transpose action") {
  const PairingOperator nb = fixture_operator("nonbijective-l22");
  CHECK(reversed_functional(nb, vec({1.0, 1.0})).norm() < 1e-12);
  const Eigen::VectorXcd v = reversed_functional(nb, vec({1.0, 0.0}));
  CHECK(std::abs(v(0) - Scalar(1.0, 0.0)) < 1e-12);
  CHECK(std::abs(v(1) - Scalar(2.0, 0.0)) < 1e-12);
}

TEST_CASE("fixture points classify correctly") {
  const PairingOperator dir = fixture_operator("direction-example");
  const SymmetryVerdict at_e1 = analyze_symmetry(dir, vec({1.0, 0.0}));
  CHECK(at_e1.left);
  CHECK(at_e1.right);
  REQUIRE(at_e1.lambda.has_value());
  CHECK(std::abs(*at_e1.lambda - Scalar(0.0, 1.0)) < 1e-10);

  const PairingOperator nb = fixture_operator("nonbijective-l22");
  const SymmetryVerdict at_ones = analyze_symmetry(nb, vec({1.0, 1.0}));
  CHECK(at_ones.left);
  CHECK_FALSE(at_ones.right);
  CHECK_FALSE(at_ones.lambda.has_value());

  const PairingOperator lemma = fixture_operator("lemma-counterexample");
  const SymmetryVerdict lemma_e1 = analyze_symmetry(lemma, vec({1.0, 0.0}));
  CHECK(lemma_e1.left);
  REQUIRE(lemma_e1.lambda.has_value());
  CHECK(std::abs(*lemma_e1.lambda - Scalar(std::sqrt(2.0), 0.0)) < 1e-10);

  const PairingOperator basic = fixture_operator("prop-basic-c2");
  const SymmetryVerdict basic_e2 = analyze_symmetry(basic, vec({0.0, 1.0}));
  CHECK_FALSE(basic_e2.left);
  CHECK_FALSE(basic_e2.right);
  CHECK_FALSE(basic_e2.lambda.has_value());
  CHECK_FALSE(basic_e2.certificate.empty());
}

TEST_CASE("antisymmetric pairing has scalar minus one") {
  const PairingOperator rot =
      pairing({{0.0, 1.0}, {-1.0, 0.0}}, ScalarField::Real);
  const SymmetryVerdict v = analyze_symmetry(rot, vec({1.0, 0.0}));
  CHECK(v.left);
  CHECK(v.right);
  REQUIRE(v.lambda.has_value());
  CHECK(std::abs(*v.lambda - Scalar(-1.0, 0.0)) < 1e-10);
}

TEST_CASE("one-sided degeneracies") {
  // Column 0 is (0, 1), column 1 is zero.
  const PairingOperator lower =
      pairing({{0.0, 0.0}, {1.0, 0.0}}, ScalarField::Real);
  const SymmetryVerdict at_e1 = analyze_symmetry(lower, vec({1.0, 0.0}));
  CHECK(at_e1.left);         // forward functional nonzero, reversed zero
  CHECK_FALSE(at_e1.right);  // reversed kernel is everything, forward is not
  CHECK_FALSE(at_e1.lambda.has_value());

  const SymmetryVerdict at_e2 = analyze_symmetry(lower, vec({0.0, 1.0}));
  CHECK_FALSE(at_e2.left);
  CHECK(at_e2.right);

  const PairingOperator zero =
      pairing({{0.0, 0.0}, {0.0, 0.0}}, ScalarField::Real);
  const SymmetryVerdict v = analyze_symmetry(zero, vec({1.0, 0.0}));
  CHECK(v.left);
  CHECK(v.right);
  CHECK_FALSE(v.lambda.has_value());
}

TEST_CASE("left and right wrappers agree with the analyzer") {
  const PairingOperator nb = fixture_operator("nonbijective-l22");
  CHECK(is_left_symmetric_at(nb, vec({1.0, 1.0})).left);
  CHECK_FALSE(is_right_symmetric_at(nb, vec({1.0, 1.0})).right);
}

TEST_CASE("symmetry scalar extraction and failure modes") {
  const PairingOperator lemma = fixture_operator("lemma-counterexample");
  CHECK(std::abs(symmetry_scalar(lemma, vec({1.0, 0.0})) -
                 Scalar(std::sqrt(2.0), 0.0)) < 1e-10);

  const PairingOperator basic = fixture_operator("prop-basic-c2");
  CHECK_THROWS_AS(symmetry_scalar(basic, vec({0.0, 1.0})), std::exception);

  const PairingOperator nb = fixture_operator("nonbijective-l22");
  CHECK_THROWS_AS(symmetry_scalar(nb, vec({1.0, 1.0})), std::exception);
}

TEST_CASE("direction left symmetry at the example point") {
  const PairingOperator dir = fixture_operator("direction-example");
  const Eigen::VectorXcd e1 = vec({1.0, 0.0});
  // Scalar is i, not real: no angle admits direction left symmetry.
  CHECK_FALSE(is_theta_left_symmetric_at(dir, kPi / 2.0, e1));
  CHECK_FALSE(is_theta_left_symmetric_at(dir, 0.0, e1));

  // Real scalar sqrt(2): direction left symmetry at admissible angles.
  const PairingOperator lemma = fixture_operator("lemma-counterexample");
  CHECK(is_theta_left_symmetric_at(lemma, 0.0, e1));
  CHECK(is_theta_left_symmetric_at(lemma, kPi, e1));
  CHECK(is_theta_left_symmetric_at(lemma, 2.0 * kPi, e1));
  CHECK_THROWS_AS(is_theta_left_symmetric_at(lemma, 0.7, e1),
                  std::exception);
}

TEST_CASE("operator symmetry by transpose distance") {
  CHECK(is_operator_symmetric(
      pairing({{1.0, 2.0}, {2.0, 3.0}}, ScalarField::Real)));
  CHECK_FALSE(is_operator_symmetric(
      pairing({{1.0, 2.0}, {3.0, 4.0}}, ScalarField::Real)));
  CHECK(is_operator_symmetric(
      pairing({{0.0, 0.0}, {0.0, 0.0}}, ScalarField::Real)));
}

TEST_CASE("nonisotropic witness search") {
  const PairingOperator id =
      pairing({{1.0, 0.0}, {0.0, 1.0}}, ScalarField::Real);
  const auto w_id = find_nonisotropic(id);
  REQUIRE(w_id.has_value());
  CHECK(std::abs(pair(id, *w_id, *w_id)) > 0.5);

  const PairingOperator rot =
      pairing({{0.0, 1.0}, {-1.0, 0.0}}, ScalarField::Real);
  CHECK_FALSE(find_nonisotropic(rot).has_value());

  // Zero diagonal but symmetric off-diagonal mass: e_1 + e_2 works.
  const PairingOperator offdiag =
      pairing({{0.0, 1.0}, {1.0, 0.0}}, ScalarField::Real);
  const auto w_off = find_nonisotropic(offdiag);
  REQUIRE(w_off.has_value());
  CHECK(std::abs(pair(offdiag, *w_off, *w_off)) > 0.5);
}

TEST_CASE("sign transport holds at left-symmetric points") {
  const PairingOperator dir = fixture_operator("direction-example");
  const HalfspaceReport good =
      halfspace_symmetry_check(dir, vec({1.0, 0.0}), 64, 7);
  CHECK(good.holds);
  REQUIRE(good.phi0.has_value());
  CHECK(*good.phi0 == doctest::Approx(kPi / 2.0).epsilon(1e-9));
  CHECK_FALSE(good.counterexample.has_value());

  // Left symmetric with zero reversed functional: transport is vacuous and
  // there is no scalar phase to report.
  const PairingOperator nb = fixture_operator("nonbijective-l22");
  const HalfspaceReport vac =
      halfspace_symmetry_check(nb, vec({1.0, 1.0}), 64, 7);
  CHECK(vac.holds);
  CHECK_FALSE(vac.phi0.has_value());
}

TEST_CASE("sign transport fails with a constructed violation") {
  const PairingOperator basic = fixture_operator("prop-basic-c2");
  const Eigen::VectorXcd x = vec({0.0, 1.0});
  const HalfspaceReport bad = halfspace_symmetry_check(basic, x, 64, 7);
  CHECK_FALSE(bad.holds);
  REQUIRE(bad.counterexample.has_value());
  const auto& cx = *bad.counterexample;
  const double scale = pair_scale(basic, x, cx.y);
  CHECK(std::abs(pair_theta(basic, cx.theta, x, cx.y)) <= 1e-8 * scale);
  CHECK(pair_theta(basic, cx.theta, cx.y, x) < -1e-8 * scale);
  CHECK_FALSE(cx.note.empty());
}
