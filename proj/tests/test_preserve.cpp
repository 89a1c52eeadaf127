#include <doctest.h>

#include <cmath>
#include <limits>

#include "banach_ortho/fixtures.hpp"
#include "banach_ortho/preserve.hpp"
#include "banach_ortho/space.hpp"

using namespace banach_ortho;

namespace {

Eigen::VectorXcd vec(std::initializer_list<Scalar> entries) {
  Eigen::VectorXcd v(static_cast<Eigen::Index>(entries.size()));
  Eigen::Index i = 0;
  for (const Scalar& s : entries) v(i++) = s;
  return v;
}

PairingOperator pairing2(Scalar a, Scalar b, Scalar c, Scalar d,
                         ScalarField field) {
  Eigen::MatrixXcd M(2, 2);
  M << a, b, c, d;
  return make_pairing(M, field);
}

EndoOperator endo2(Scalar a, Scalar b, Scalar c, Scalar d, ScalarField field) {
  Eigen::MatrixXcd A(2, 2);
  A << a, b, c, d;
  return EndoOperator{A, field};
}

const PairingOperator kIdentity =
    pairing2(1.0, 0.0, 0.0, 1.0, ScalarField::Real);

EndoOperator rotation(double angle) {
  return endo2(std::cos(angle), -std::sin(angle), std::sin(angle),
               std::cos(angle), ScalarField::Real);
}

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

TEST_CASE("adjoint conjugation computes A^T M A") {
  const PairingOperator rotated = adjoint_conjugate(kIdentity, rotation(0.7));
  CHECK((rotated.M - Eigen::MatrixXcd::Identity(2, 2)).norm() < 1e-12);

  const EndoOperator diag = endo2(2.0, 0.0, 0.0, 1.0, ScalarField::Real);
  const PairingOperator scaled = adjoint_conjugate(kIdentity, diag);
  CHECK(std::abs(scaled.M(0, 0) - Scalar(4.0, 0.0)) < 1e-12);
  CHECK(std::abs(scaled.M(1, 1) - Scalar(1.0, 0.0)) < 1e-12);
  CHECK(std::abs(scaled.M(0, 1)) < 1e-12);
  CHECK(std::abs(scaled.M(1, 0)) < 1e-12);
}

TEST_CASE("adjoint conjugation is functorial in the endomorphism") {
  const PairingOperator T =
      pairing2(1.0, 2.0, -1.0, 0.5, ScalarField::Real);
  const EndoOperator A = endo2(1.0, 1.0, 0.0, 1.0, ScalarField::Real);
  const EndoOperator B = endo2(2.0, -1.0, 1.0, 3.0, ScalarField::Real);
  const EndoOperator AB{A.A * B.A, ScalarField::Real};
  const Eigen::MatrixXcd lhs = adjoint_conjugate(adjoint_conjugate(T, A), B).M;
  const Eigen::MatrixXcd rhs = adjoint_conjugate(T, AB).M;
  CHECK((lhs - rhs).norm() < 1e-12 * (1.0 + rhs.norm()));
}

TEST_CASE("adjoint conjugation validates shapes and fields") {
  EndoOperator wrong_dim{Eigen::MatrixXcd::Identity(3, 3), ScalarField::Real};
  CHECK_THROWS_AS(adjoint_conjugate(kIdentity, wrong_dim), std::exception);
  EndoOperator wrong_field{Eigen::MatrixXcd::Identity(2, 2),
                           ScalarField::Complex};
  CHECK_THROWS_AS(adjoint_conjugate(kIdentity, wrong_field), std::exception);
}

TEST_CASE("isometry defect and flag") {
  CHECK(isometry_defect(kIdentity, rotation(1.1)) < 1e-12);
  CHECK(is_T_isometry(kIdentity, rotation(1.1)));

  const EndoOperator twice = endo2(2.0, 0.0, 0.0, 2.0, ScalarField::Real);
  CHECK(isometry_defect(kIdentity, twice) == doctest::Approx(3.0));
  CHECK_FALSE(is_T_isometry(kIdentity, twice));
}

TEST_CASE("preserver scalar for collinear conjugates") {
  const EndoOperator twice = endo2(2.0, 0.0, 0.0, 2.0, ScalarField::Real);
  const auto beta = preserver_scalar(kIdentity, twice);
  REQUIRE(beta.has_value());
  CHECK(std::abs(*beta - Scalar(0.25, 0.0)) < 1e-12);

  const auto rot = preserver_scalar(kIdentity, rotation(0.3));
  REQUIRE(rot.has_value());
  CHECK(std::abs(*rot - Scalar(1.0, 0.0)) < 1e-12);

  const EndoOperator shear = endo2(1.0, 1.0, 0.0, 1.0, ScalarField::Real);
  CHECK_FALSE(preserver_scalar(kIdentity, shear).has_value());

  const EndoOperator zero{Eigen::MatrixXcd::Zero(2, 2), ScalarField::Real};
  CHECK_FALSE(preserver_scalar(kIdentity, zero).has_value());
}

TEST_CASE("sampled preservation verdicts") {
  const EndoOperator twice = endo2(2.0, 0.0, 0.0, 2.0, ScalarField::Real);
  const PreserveReport ok =
      preserves_T_orthogonality_sampled(kIdentity, twice, 100, 5);
  CHECK(ok.holds);
  CHECK(ok.conclusive);
  CHECK_FALSE(ok.counterexample.has_value());

  const EndoOperator shear = endo2(1.0, 1.0, 0.0, 1.0, ScalarField::Real);
  const PreserveReport bad =
      preserves_T_orthogonality_sampled(kIdentity, shear, 100, 5);
  CHECK_FALSE(bad.holds);
  CHECK(bad.conclusive);
  REQUIRE(bad.counterexample.has_value());
  const auto& cx = *bad.counterexample;
  CHECK(cx.gap > 0.0);
  if (cx.forward) {
    CHECK(is_T_orthogonal(kIdentity, cx.x, cx.y).verdict);
    CHECK_FALSE(
        is_T_orthogonal(kIdentity, shear.A * cx.x, shear.A * cx.y).verdict);
  } else {
    const PairingOperator conj = adjoint_conjugate(kIdentity, shear);
    CHECK(is_T_orthogonal(conj, cx.x, cx.y).verdict);
    CHECK_FALSE(is_T_orthogonal(kIdentity, cx.x, cx.y).verdict);
  }

  const PairingOperator rank1 =
      pairing2(1.0, 0.0, 0.0, 0.0, ScalarField::Real);
  const EndoOperator ident = endo2(1.0, 0.0, 0.0, 1.0, ScalarField::Real);
  const PreserveReport vac =
      preserves_T_orthogonality_sampled(rank1, ident, 100, 5);
  CHECK(vac.holds);
  CHECK_FALSE(vac.conclusive);
}

TEST_CASE("pairing fit on euclidean samples recovers the inner product") {
  const PNormSpace l2{2, 2.0, ScalarField::Real};
  const FitReport r = hilbert_fit(l2, 200, 42);
  CHECK(r.residual <= 1e-8);
  CHECK(r.m_fit.norm() == doctest::Approx(1.0));
  // Unit-norm fit is a sign multiple of I / sqrt(2).
  const Eigen::MatrixXcd target =
      Eigen::MatrixXcd::Identity(2, 2) / std::sqrt(2.0);
  const double err =
      std::min((r.m_fit - target).norm(), (r.m_fit + target).norm());
  CHECK(err < 1e-6);

  const PNormSpace l2c3{3, 2.0, ScalarField::Real};
  CHECK(hilbert_fit(l2c3, 200, 42).residual <= 1e-8);
}

TEST_CASE("pairing fit residual floor away from exponent two") {
  const PNormSpace l15{2, 1.5, ScalarField::Real};
  CHECK(hilbert_fit(l15, 200, 42).residual >= 0.01);
  const PNormSpace l3{2, 3.0, ScalarField::Real};
  CHECK(hilbert_fit(l3, 200, 42).residual >= 0.01);
  const PNormSpace c2{2, 2.0, ScalarField::Complex};
  CHECK(hilbert_fit(c2, 200, 42).residual >= 0.01);
}

TEST_CASE("pairing fit input validation") {
  CHECK_THROWS_AS(hilbert_fit(PNormSpace{2, 1.0, ScalarField::Real}, 200, 42),
                  std::exception);
  CHECK_THROWS_AS(hilbert_fit(PNormSpace{2, kInf, ScalarField::Real}, 200, 42),
                  std::exception);
  CHECK_THROWS_AS(hilbert_fit(PNormSpace{1, 2.0, ScalarField::Real}, 200, 42),
                  std::exception);
  CHECK_THROWS_AS(hilbert_fit(PNormSpace{2, 2.0, ScalarField::Real}, 3, 42),
                  std::exception);
}

TEST_CASE("quarter-turn orthogonality deviation by exponent") {
  const RotationReport p2 = rotation_bj_deviation(2.0, 200, 42);
  CHECK(p2.max_gap <= 1e-10);

  const RotationReport p3 = rotation_bj_deviation(3.0, 200, 42);
  CHECK(p3.max_gap > 1e-3);
  REQUIRE(p3.witness.has_value());
  // The witness reproduces the reported gap.
  const PNormSpace l3{2, 3.0, ScalarField::Real};
  const auto [a, b] = *p3.witness;
  const OrthResult v = is_bj_orthogonal(l3, vec({a, b}), vec({b, -a}));
  CHECK(v.gap == doctest::Approx(p3.max_gap));

  CHECK(rotation_bj_deviation(1.0, 200, 42).max_gap > 1e-3);
  CHECK_THROWS_AS(rotation_bj_deviation(0.5, 200, 42), std::exception);
}

TEST_CASE("two-dimensional conditions in the euclidean case") {
  const PNormSpace l2{2, 2.0, ScalarField::Real};
  const TwoDimReport r = two_dim_hilbert_conditions(
      l2, kIdentity, vec({1.0, 0.0}), vec({0.0, 1.0}), 100, 11);
  CHECK(r.all_pass);
  REQUIRE(r.conditions.size() == 5);
  for (const auto& c : r.conditions) CHECK(c.pass);
}

TEST_CASE("two-dimensional conditions fail for the four-norm") {
  const PNormSpace l4{2, 4.0, ScalarField::Real};
  const TwoDimReport r = two_dim_hilbert_conditions(
      l4, kIdentity, vec({1.0, 0.0}), vec({0.0, 1.0}), 300, 11);
  CHECK_FALSE(r.all_pass);
  bool saw_identity = false;
  bool saw_tvsbj = false;
  for (const auto& c : r.conditions) {
    if (c.id == "bj-uv" || c.id == "bj-vu" || c.id == "bj-diag")
      CHECK(c.pass);
    if (c.id == "norm-identity") {
      saw_identity = true;
      CHECK_FALSE(c.pass);
      // Relative violation of the rotation norm identity is macroscopic.
      CHECK(c.max_violation * 1e-8 >= 0.01);
    }
    if (c.id == "t-vs-bj") {
      saw_tvsbj = true;
      CHECK_FALSE(c.pass);
    }
  }
  CHECK(saw_identity);
  CHECK(saw_tvsbj);
}

TEST_CASE("four-norm identity violation at a fixed coefficient triple") {
  // gamma = 2, delta = 1, kappa = 1/2 with u = e_1, v = e_2.
  const PNormSpace l4{2, 4.0, ScalarField::Real};
  const double n1 = p_norm(l4, vec({2.5, 0.0}));
  const double n2 = p_norm(l4, vec({1.5, 2.0}));
  CHECK(n1 == doctest::Approx(2.5));
  CHECK(n2 == doctest::Approx(std::pow(21.0625, 0.25)));
  const double rel = std::abs(n1 - n2) / std::max(n1, n2);
  CHECK(rel > 0.14);
}

TEST_CASE("structure of a pairing matching coordinate orthogonality") {
  const StructureReport scaled = lp_pairing_structure_check(
      pairing2(3.0, 0.0, 0.0, 3.0, ScalarField::Real));
  CHECK(scaled.diagonal);
  CHECK(scaled.equal_diagonal);

  const StructureReport stretched = lp_pairing_structure_check(
      pairing2(1.0, 0.0, 0.0, 2.0, ScalarField::Real));
  CHECK(stretched.diagonal);
  CHECK_FALSE(stretched.equal_diagonal);
  CHECK(stretched.diag_spread_rel == doctest::Approx(0.5));

  const StructureReport full =
      lp_pairing_structure_check(fixture_operator("prop-basic-c2"));
  CHECK_FALSE(full.diagonal);
  CHECK(full.offdiag_rel > 0.1);
}

TEST_CASE("structure check requires a two-dimensional pairing") {
  CHECK_THROWS_AS(
      lp_pairing_structure_check(make_pairing(
          Eigen::MatrixXcd::Identity(3, 3), ScalarField::Real)),
      std::exception);
}
