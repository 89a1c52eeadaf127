#pragma once

#include <Eigen/Dense>
#include <optional>

#include "banach_ortho/scalar.hpp"

namespace banach_ortho {

// Finite-dimensional l_p space. p lies in [1, inf]; infinity is represented by
// std::numeric_limits<double>::infinity().
struct PNormSpace {
  int n = 0;
  double p = 2.0;
  ScalarField field = ScalarField::Real;
};

// 1/p + 1/q = 1 with the usual conventions at the endpoints.
double dual_exponent(double p);

// Decision record: verdict is true iff gap <= the tolerance passed to the
// producing operation; witness carries the minimizing scalar where one exists.
struct OrthResult {
  bool verdict = false;
  double gap = 0.0;
  std::optional<Scalar> witness;
};

struct BjMinimum {
  Scalar lambda;  // achieving scalar
  double value;   // min over scalars of ||x + lambda y||_p
};

struct SpaceProperties {
  bool smooth = false;
  bool strictly_convex = false;
};

// (sum |x_i|^p)^(1/p), max coordinate modulus when p = inf. Scaled by the
// largest modulus so huge entries do not overflow.
double p_norm(const PNormSpace& space, const Eigen::VectorXcd& x);

// Normalized support functional at x (1 < p < inf, x != 0):
// f_i = conj(sign(x_i)) (|x_i|/||x||)^(p-1); f(x) = ||x||_p and ||f||_q = 1.
Eigen::VectorXcd support_functional(const PNormSpace& space,
                                    const Eigen::VectorXcd& x);

// Unit vector z with z_i proportional to conj(sign(f_i)) |f_i|^(q-1); attains
// |f(z)| = ||f||_q. Requires 1 < p < inf and f != 0.
Eigen::VectorXcd inverse_duality(const PNormSpace& space,
                                 const Eigen::VectorXcd& f);

// Canonical representative of the norm-attainment set of f; the whole set is
// its unimodular orbit. Identical to inverse_duality.
Eigen::VectorXcd norm_attainment_direction(const PNormSpace& space,
                                           const Eigen::VectorXcd& f);

// min over scalars lambda of ||x + lambda y||_p via golden-section search
// (alternating over real and imaginary parts in the complex field). The
// minimum lies in the disk |lambda| <= 2||x||/||y||. Requires y != 0.
BjMinimum bj_minimize(const PNormSpace& space, const Eigen::VectorXcd& x,
                      const Eigen::VectorXcd& y);

// ||x + lambda y|| >= ||x|| for all scalars lambda, decided by minimization.
// gap = (||x|| - min)/||x||; witness = minimizing lambda. Requires x, y != 0.
OrthResult is_bj_orthogonal(const PNormSpace& space, const Eigen::VectorXcd& x,
                            const Eigen::VectorXcd& y, double tol = 1e-8);

// Smooth-space criterion (1 < p < inf): |f_x(y)| / ||y||_p. Zero exactly when
// x is Birkhoff-James orthogonal to y.
double bj_functional_gap(const PNormSpace& space, const Eigen::VectorXcd& x,
                         const Eigen::VectorXcd& y);

// ||x + y|| = ||x - y|| within tol * max(||x+y||, ||x-y||, 1).
OrthResult is_isosceles_orthogonal(const PNormSpace& space,
                                   const Eigen::VectorXcd& x,
                                   const Eigen::VectorXcd& y,
                                   double tol = 1e-8);

// Smooth and strictly convex iff 1 < p < inf, or n = 1.
SpaceProperties space_properties(const PNormSpace& space);

}  // namespace banach_ortho
