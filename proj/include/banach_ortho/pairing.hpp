#pragma once

#include <Eigen/Dense>
#include <vector>

#include "banach_ortho/space.hpp"

namespace banach_ortho {

// Bilinear pairing operator: (Tx, y) = sum_j (Mx)_j y_j with no conjugation.
// Column j of M lists the dual-basis coefficients of T(e_j); consequently the
// reversed pairing satisfies (Ty, x) = sum_j (M^T x)_j y_j.
struct PairingOperator {
  Eigen::MatrixXcd M;
  ScalarField field = ScalarField::Real;
  double op_norm = 0.0;   // operator 2-norm, power-iteration estimate
  bool bijective = false; // sigma_min > 1e-10 * sigma_max
};

// Validates squareness/finiteness, estimates the operator norm (20 power
// iterations) and caches the rank test.
PairingOperator make_pairing(Eigen::MatrixXcd M, ScalarField field);

// Angle in [0, 2pi); any_direction is set when the pairing vanished and every
// theta qualifies.
struct ThetaDirection {
  double theta = 0.0;
  bool any_direction = false;
};

enum class SignClass { Plus, Minus, Zero };

// (Tx, y). Bilinear in both slots.
Scalar pair(const PairingOperator& T, const Eigen::VectorXcd& x,
            const Eigen::VectorXcd& y);

// cos(theta) Re(Tx,y) + sin(theta) Im(Tx,y). Real-field inputs have zero
// imaginary part, so every theta degenerates to +-cos(theta) (Tx,y).
double pair_theta(const PairingOperator& T, double theta,
                  const Eigen::VectorXcd& x, const Eigen::VectorXcd& y);

// Tolerance scale 1 + ||M|| ||x||_2 ||y||_2 used by all pairing verdicts.
double pair_scale(const PairingOperator& T, const Eigen::VectorXcd& x,
                  const Eigen::VectorXcd& y);

OrthResult is_T_orthogonal(const PairingOperator& T, const Eigen::VectorXcd& x,
                           const Eigen::VectorXcd& y, double tol = 1e-8);

OrthResult is_T_theta_orthogonal(const PairingOperator& T, double theta,
                                 const Eigen::VectorXcd& x,
                                 const Eigen::VectorXcd& y, double tol = 1e-8);

// A theta with pair_theta(T, theta, x, y) = 0: writing (Tx,y) = a + ib, the
// returned angle is atan2(a, -b) reduced to [0, 2pi).
ThetaDirection theta_direction(const PairingOperator& T,
                               const Eigen::VectorXcd& x,
                               const Eigen::VectorXcd& y);

// Zero iff |pair_theta| <= tol * scale, else the sign of pair_theta.
SignClass sign_class(const PairingOperator& T, double theta,
                     const Eigen::VectorXcd& x, const Eigen::VectorXcd& y,
                     double tol = 1e-8);

// (Tx, x) = 0 within tol * (1 + ||M|| ||x||^2).
OrthResult is_isotropic(const PairingOperator& T, const Eigen::VectorXcd& x,
                        double tol = 1e-8);

// Orthonormal basis of {y : (Tx, y) = 0}, n-1 vectors. Throws when Mx = 0
// (the perp is the whole space).
std::vector<Eigen::VectorXcd> t_perp_basis(const PairingOperator& T,
                                           const Eigen::VectorXcd& x);

// Orthonormal basis of {y : sum_i u_i y_i = 0} for u != 0, via the
// Householder factorization of conj(u). Shared by t_perp_basis and the
// support-functional kernels.
std::vector<Eigen::VectorXcd> functional_kernel_basis(
    const Eigen::VectorXcd& u);

}  // namespace banach_ortho
