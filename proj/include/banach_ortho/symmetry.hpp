#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>

#include "banach_ortho/pairing.hpp"

namespace banach_ortho {

// Verdict for one point x. lambda, when present, satisfies
// (Tx, y) = lambda (Ty, x) for all y and is nonzero; it is absent when
// Mx = 0 or when the two functionals are not collinear (including the
// degenerate Mx != 0, M^T x = 0 case, where no finite scalar exists).
struct SymmetryVerdict {
  bool left = false;
  bool right = false;
  std::optional<Scalar> lambda;
  std::string certificate;
};

// Coefficient vector of y -> (Ty, x), i.e. M^T x.
Eigen::VectorXcd reversed_functional(const PairingOperator& T,
                                     const Eigen::VectorXcd& x);

// Core decision. With u = Mx and v = M^T x:
//   left  <=> (u = 0 ? v = 0 : v in span{u}),
//   right <=> (v = 0 ? u = 0 : u in span{v}),
// collinearity tested by the relative least-squares residual being < tol.
SymmetryVerdict analyze_symmetry(const PairingOperator& T,
                                 const Eigen::VectorXcd& x, double tol = 1e-8);

SymmetryVerdict is_left_symmetric_at(const PairingOperator& T,
                                     const Eigen::VectorXcd& x,
                                     double tol = 1e-8);

SymmetryVerdict is_right_symmetric_at(const PairingOperator& T,
                                      const Eigen::VectorXcd& x,
                                      double tol = 1e-8);

// The scalar of the verdict, verified on all basis vectors to 1e-10 relative.
// Throws when x is not left symmetric, Mx = 0, or M^T x = 0.
Scalar symmetry_scalar(const PairingOperator& T, const Eigen::VectorXcd& x,
                       double tol = 1e-8);

// Left symmetry of the direction-theta relation at x: the two real-linear
// functionals y -> pair_theta(T, theta, x, y) and y -> pair_theta(T, theta,
// y, x) on R^{2n} must have nested kernels, i.e. the second coefficient
// vector lies in the real span of the first. Real field admits only
// theta in {0, pi}.
bool is_theta_left_symmetric_at(const PairingOperator& T, double theta,
                                const Eigen::VectorXcd& x, double tol = 1e-8);

// ||M - M^T||_F <= tol ||M||_F.
bool is_operator_symmetric(const PairingOperator& T, double tol = 1e-8);

// A vector with (Tx, x) != 0 when one exists. The quadratic form vanishes
// identically iff M + M^T = 0; otherwise a basis vector e_i with the largest
// |(M + M^T)_ii|, or e_i +- e_j for the largest off-diagonal entry, is
// returned after verification. nullopt when M + M^T = 0 at tolerance.
std::optional<Eigen::VectorXcd> find_nonisotropic(const PairingOperator& T,
                                                  double tol = 1e-10);

struct HalfspaceCounterexample {
  double theta = 0.0;
  Eigen::VectorXcd y;
  std::string note;
};

struct HalfspaceReport {
  bool holds = false;
  std::optional<double> phi0;
  std::optional<HalfspaceCounterexample> counterexample;
};

// Sign-class transport check: when x is left symmetric with scalar
// lambda = |lambda| e^{i phi0}, membership y in the plus (minus) class of x
// at angle theta forces x into the plus (minus or zero) class of y at angle
// theta - phi0; verified on random (theta, y). When x is not left symmetric
// an explicit violating (theta, y) is constructed instead of sampled.
HalfspaceReport halfspace_symmetry_check(const PairingOperator& T,
                                         const Eigen::VectorXcd& x,
                                         int samples, uint64_t seed,
                                         double tol = 1e-8);

}  // namespace banach_ortho
