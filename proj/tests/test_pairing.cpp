#include <doctest.h>

#include <cmath>
#include <numbers>

#include "banach_ortho/fixtures.hpp"
#include "banach_ortho/pairing.hpp"

using namespace banach_ortho;

namespace {

constexpr double kPi = std::numbers::pi;

Eigen::VectorXcd vec(std::initializer_list<Scalar> entries) {
  Eigen::VectorXcd v(static_cast<Eigen::Index>(entries.size()));
  Eigen::Index i = 0;
  for (const Scalar& s : entries) v(i++) = s;
  return v;
}

PairingOperator identity_pairing(int n, ScalarField field) {
  return make_pairing(Eigen::MatrixXcd::Identity(n, n), field);
}

}  // namespace

TEST_CASE("make_pairing estimates the norm and the rank") {
  const PairingOperator id = identity_pairing(3, ScalarField::Real);
  CHECK(id.op_norm == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(id.bijective);

  CHECK_FALSE(fixture_operator("nonbijective-l22").bijective);
  CHECK(fixture_operator("prop-basic-c2").bijective);

  Eigen::MatrixXcd bad(2, 3);
  bad.setZero();
  CHECK_THROWS_AS(make_pairing(bad, ScalarField::Real), std::exception);

  Eigen::MatrixXcd leaky = Eigen::MatrixXcd::Identity(2, 2);
  leaky(0, 1) = Scalar(0.0, 0.5);
  CHECK_THROWS_AS(make_pairing(leaky, ScalarField::Real), std::exception);
}

TEST_CASE("pairing values on the bundled operators") {
  const PairingOperator basic = fixture_operator("prop-basic-c2");
  const Scalar p = pair(basic, vec({0.0, 1.0}),
                        vec({0.5, Scalar(-1.0 / 3.0, 0.0)}));
  CHECK(std::abs(p - Scalar(1.0, -1.0)) < 1e-12);

  const PairingOperator nb = fixture_operator("nonbijective-l22");
  CHECK(std::abs(pair(nb, vec({1.0, 0.0}), vec({1.0, 1.0}))) < 1e-12);
  CHECK(std::abs(pair(nb, vec({1.0, 1.0}), vec({1.0, 0.0})) -
                 Scalar(3.0, 0.0)) < 1e-12);
}

TEST_CASE("direction component interpolates real and imaginary parts") {
  const PairingOperator basic = fixture_operator("prop-basic-c2");
  const Eigen::VectorXcd x = vec({0.0, 1.0});
  const Eigen::VectorXcd y = vec({0.5, Scalar(-1.0 / 3.0, 0.0)});
  // pair = 1 - i: components cos(theta) - sin(theta).
  CHECK(pair_theta(basic, 0.0, x, y) == doctest::Approx(1.0));
  CHECK(pair_theta(basic, kPi / 2.0, x, y) == doctest::Approx(-1.0));
  CHECK(std::abs(pair_theta(basic, kPi / 4.0, x, y)) < 1e-12);
}

TEST_CASE("vanishing angle of a nonzero pairing") {
  const PairingOperator basic = fixture_operator("prop-basic-c2");
  const ThetaDirection d = theta_direction(basic, vec({0.0, 1.0}),
                                           vec({0.5, Scalar(-1.0 / 3.0, 0.0)}));
  CHECK_FALSE(d.any_direction);
  CHECK(d.theta == doctest::Approx(kPi / 4.0).epsilon(1e-12));
  CHECK(std::abs(pair_theta(basic, d.theta, vec({0.0, 1.0}),
                            vec({0.5, Scalar(-1.0 / 3.0, 0.0)}))) < 1e-12);
}

TEST_CASE("vanishing angle of an orthogonal pair is arbitrary") {
  const PairingOperator id = identity_pairing(2, ScalarField::Real);
  const ThetaDirection d =
      theta_direction(id, vec({1.0, 0.0}), vec({0.0, 1.0}));
  CHECK(d.any_direction);
  CHECK(d.theta == 0.0);
}

TEST_CASE("sign classes split by the direction component") {
  const PairingOperator id = identity_pairing(2, ScalarField::Real);
  const Eigen::VectorXcd e1 = vec({1.0, 0.0});
  const Eigen::VectorXcd e2 = vec({0.0, 1.0});
  CHECK(sign_class(id, 0.0, e1, e1) == SignClass::Plus);
  CHECK(sign_class(id, kPi, e1, e1) == SignClass::Minus);
  CHECK(sign_class(id, 0.0, e1, e2) == SignClass::Zero);
}

TEST_CASE("plain and direction orthogonality decisions") {
  const PairingOperator id = identity_pairing(2, ScalarField::Real);
  CHECK(is_T_orthogonal(id, vec({1.0, 0.0}), vec({0.0, 1.0})).verdict);
  CHECK_FALSE(is_T_orthogonal(id, vec({1.0, 0.0}), vec({1.0, 0.0})).verdict);
  // Scaled inputs stay decided thanks to the relative tolerance.
  CHECK(is_T_orthogonal(id, vec({1e6, 0.0}), vec({0.0, 1e6})).verdict);

  const PairingOperator basic = fixture_operator("prop-basic-c2");
  const Eigen::VectorXcd x = vec({0.0, 1.0});
  const Eigen::VectorXcd y = vec({0.5, Scalar(-1.0 / 3.0, 0.0)});
  CHECK(is_T_theta_orthogonal(basic, kPi / 4.0, x, y).verdict);
  CHECK_FALSE(is_T_theta_orthogonal(basic, 0.0, x, y).verdict);
  CHECK_FALSE(is_T_orthogonal(basic, x, y).verdict);
}

TEST_CASE("isotropy of a point") {
  const PairingOperator dir = fixture_operator("direction-example");
  CHECK(is_isotropic(dir, vec({1.0, 0.0})).verdict);
  const PairingOperator id = identity_pairing(2, ScalarField::Real);
  CHECK_FALSE(is_isotropic(id, vec({1.0, 0.0})).verdict);
}

TEST_CASE("orthogonal complement basis of one point") {
  const PairingOperator id = identity_pairing(3, ScalarField::Real);
  const Eigen::VectorXcd x = vec({1.0, 0.0, 0.0});
  const auto basis = t_perp_basis(id, x);
  REQUIRE(basis.size() == 2);
  for (const auto& b : basis) {
    CHECK(std::abs(pair(id, x, b)) < 1e-12);
    CHECK(b.norm() == doctest::Approx(1.0));
  }
  // Orthonormal within the basis as well.
  CHECK(std::abs(basis[0].dot(basis[1])) < 1e-12);

  const PairingOperator nb = fixture_operator("nonbijective-l22");
  // M (2, -1) = 0: the functional vanishes and no basis exists.
  CHECK_THROWS_AS(t_perp_basis(nb, vec({2.0, -1.0})), std::exception);
}

TEST_CASE("kernel basis of a raw functional") {
  const Eigen::VectorXcd u = vec({Scalar(1.0, 1.0), Scalar(0.0, -2.0)});
  const auto basis = functional_kernel_basis(u);
  REQUIRE(basis.size() == 1);
  CHECK(std::abs(u.cwiseProduct(basis[0]).sum()) < 1e-12);
}
