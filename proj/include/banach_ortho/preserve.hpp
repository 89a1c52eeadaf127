#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "banach_ortho/pairing.hpp"

namespace banach_ortho {

// Endomorphism A : X -> X. Its adjoint acts on dual coefficient vectors by
// the plain transpose (the dual action is bilinear, so no conjugation).
struct EndoOperator {
  Eigen::MatrixXcd A;
  ScalarField field = ScalarField::Real;
};

// Pairing of (Ax, Ay): matrix A^T M A.
PairingOperator adjoint_conjugate(const PairingOperator& T,
                                  const EndoOperator& A);

// ||A^T M A - M||_F / ||M||_F.
double isometry_defect(const PairingOperator& T, const EndoOperator& A);

bool is_T_isometry(const PairingOperator& T, const EndoOperator& A,
                   double tol = 1e-8);

// beta with M = beta A^T M A when the two matrices are collinear (relative
// least-squares residual <= tol); nullopt otherwise or when A^T M A = 0.
std::optional<Scalar> preserver_scalar(const PairingOperator& T,
                                       const EndoOperator& A,
                                       double tol = 1e-8);

struct PreserveCounterexample {
  Eigen::VectorXcd x;
  Eigen::VectorXcd y;
  bool forward = true;  // true: x perp_T y but Ax not perp_T Ay
  double gap = 0.0;
};

struct PreserveReport {
  bool holds = false;
  // False when M or A is rank deficient: the characterization of preservers
  // assumes a bijective pairing, so a sampled "holds" is not conclusive then.
  bool conclusive = true;
  std::optional<PreserveCounterexample> counterexample;
};

// Samples x, pairs it with exact kernel vectors of (Tx, .) and checks
// Ax perp_T Ay; then the converse with the pairing A^T M A. First violation
// is reported.
PreserveReport preserves_T_orthogonality_sampled(const PairingOperator& T,
                                                 const EndoOperator& A,
                                                 int samples, uint64_t seed,
                                                 double tol = 1e-8);

// Least-squares fit of a pairing matrix to sampled Birkhoff-James pairs.
// residual is the smallest singular value of the row-normalized constraint
// system; m_fit the corresponding right singular vector reshaped to n x n
// with unit Frobenius norm.
struct FitReport {
  double p = 2.0;
  int samples = 0;
  uint64_t seed = 0;
  double residual = 0.0;
  Eigen::MatrixXcd m_fit;
  ScalarField field = ScalarField::Real;
};

// Generates `samples` pairs x perp_B y (x gaussian, y from the kernel of the
// support functional of x) and fits sum_ij M_ij x_j y_i = 0. Requires
// 1 < p < inf and n >= 2.
FitReport hilbert_fit(const PNormSpace& space, int samples, uint64_t seed);

struct RotationReport {
  double max_gap = 0.0;
  std::optional<std::pair<double, double>> witness;  // maximizing (alpha, beta)
};

// Maximum Birkhoff-James gap of ((alpha, beta), (beta, -alpha)) in real l_p^2
// over `samples` gaussian draws. Zero for p = 2; positive witnesses exist for
// every other p.
RotationReport rotation_bj_deviation(double p, int samples, uint64_t seed);

struct ConditionResult {
  std::string id;
  double max_violation = 0.0;
  bool pass = false;
};

struct TwoDimReport {
  std::vector<ConditionResult> conditions;
  bool all_pass = false;
};

// For unit u, v in a real two-dimensional space: mutual Birkhoff-James
// orthogonality, the diagonal relation (u+v) perp_B (u-v), the rotation norm
// identity ||(g+kd)u + (d-kg)v|| = ||(g-kd)u + (d+kg)v|| over random
// (g, d, k), and sampled agreement of perp_T with perp_B (smooth p only).
TwoDimReport two_dim_hilbert_conditions(const PNormSpace& space,
                                        const PairingOperator& T,
                                        const Eigen::VectorXcd& u,
                                        const Eigen::VectorXcd& v, int samples,
                                        uint64_t seed, double tol = 1e-8);

struct StructureReport {
  bool diagonal = false;
  bool equal_diagonal = false;
  double offdiag_rel = 0.0;
  double diag_spread_rel = 0.0;
};

// Structural consequences for a 2-D pairing claimed to match perp_B:
// e_1 perp e_2 both ways forces M diagonal; (e_1+e_2) perp (e_1-e_2) forces
// equal diagonal entries.
StructureReport lp_pairing_structure_check(const PairingOperator& T,
                                           double tol = 1e-8);

}  // namespace banach_ortho
