#pragma once

#include <Eigen/Dense>
#include <optional>

#include "banach_ortho/scalar.hpp"

namespace banach_ortho {

// Deterministic random families for tests and property suites. All draws are
// functions of the passed engine only.

// Standard gaussian entries; complex field gets independent real and
// imaginary parts.
Eigen::VectorXcd sample_gaussian_vector(Rng& rng, int n, ScalarField field);
Eigen::MatrixXcd sample_gaussian_matrix(Rng& rng, int n, ScalarField field);

Eigen::MatrixXcd sample_symmetric_matrix(Rng& rng, int n, ScalarField field);
Eigen::MatrixXcd sample_antisymmetric_matrix(Rng& rng, int n,
                                             ScalarField field);

// Well-conditioned invertible matrix Q1 * D * Q2 with D in [0.5, 1.5].
Eigen::MatrixXcd sample_invertible_matrix(Rng& rng, int n, ScalarField field);

// Q with Q^T Q = I (real orthogonal / complex orthogonal), from the Cayley
// transform of an antisymmetric matrix.
Eigen::MatrixXcd sample_transpose_orthogonal(Rng& rng, int n,
                                             ScalarField field);

// x with x^T M x = 0, found by solving the quadratic along a random line.
// nullopt when no vector is found (e.g. a definite symmetric part over the
// reals).
std::optional<Eigen::VectorXcd> sample_isotropic_vector(
    Rng& rng, const Eigen::MatrixXcd& M, ScalarField field, int attempts = 64);

// Operator with prescribed functionals at x: M x = u and M^T x = r u, plus
// noise vanishing at x in both slots. Requires u^T x = 0 unless r = 1; the
// builder projects u accordingly. With real r the point x is left symmetric
// at every admissible theta; with nonreal r only plain left symmetry holds.
struct PointInstance {
  Eigen::MatrixXcd M;
  Eigen::VectorXcd x;
  Scalar r;  // M^T x = r M x
};

// r != 1 branch: x is isotropic by construction.
PointInstance sample_collinear_at_isotropic(Rng& rng, int n, ScalarField field,
                                            Scalar r);

// r = 1 branch: u^T x != 0, so x is nonisotropic and the scalar is 1.
PointInstance sample_symmetric_point(Rng& rng, int n, ScalarField field);

// M = R^T R (bijective), A = c R^{-1} Q R with Q transpose-orthogonal:
// A^T M A = c^2 M, so A is a scalar multiple of a T-isometry and the
// preserver scalar is 1/c^2.
struct IsometryInstance {
  Eigen::MatrixXcd M;
  Eigen::MatrixXcd A;
  Scalar c;
  Scalar beta;  // 1 / c^2
};

IsometryInstance sample_t_isometry(Rng& rng, int n, ScalarField field,
                                   bool scaled);

}  // namespace banach_ortho
