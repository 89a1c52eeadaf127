#include "banach_ortho/pairing.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace banach_ortho {

namespace {

void check_dims(const PairingOperator& T, const Eigen::VectorXcd& x,
                const char* what) {
  if (x.size() != T.M.rows())
    throw std::invalid_argument(std::string(what) +
                                ": dimension does not match the operator");
}

double wrap_angle(double theta) {
  const double two_pi = 2.0 * std::numbers::pi;
  double t = std::fmod(theta, two_pi);
  if (t < 0.0) t += two_pi;
  if (t >= two_pi) t = 0.0;
  return t;
}

}  // namespace

PairingOperator make_pairing(Eigen::MatrixXcd M, ScalarField field) {
  if (M.rows() != M.cols() || M.rows() < 1)
    throw std::invalid_argument("pairing matrix must be square and nonempty");
  if (!M.allFinite())
    throw std::invalid_argument("pairing matrix has non-finite entries");
  if (field == ScalarField::Real && M.imag().cwiseAbs().maxCoeff() != 0.0)
    throw std::invalid_argument(
        "real-field pairing matrix has complex entries");

  PairingOperator T;
  T.field = field;
  const Eigen::Index n = M.rows();

  // Operator 2-norm by 20 power iterations on M* M from a fixed start.
  Eigen::VectorXcd v = Eigen::VectorXcd::Constant(n, Scalar(1.0, 0.0));
  v /= v.norm();
  double est = 0.0;
  for (int it = 0; it < 20; ++it) {
    Eigen::VectorXcd w = M.adjoint() * (M * v);
    const double nw = w.norm();
    if (nw == 0.0) break;
    v = w / nw;
    est = (M * v).norm();
  }
  T.op_norm = est;

  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(M);
  const Eigen::VectorXd sv = svd.singularValues();
  T.bijective = sv(n - 1) > 1e-10 * sv(0);
  T.M = std::move(M);
  return T;
}

Scalar pair(const PairingOperator& T, const Eigen::VectorXcd& x,
            const Eigen::VectorXcd& y) {
  check_dims(T, x, "pair");
  check_dims(T, y, "pair");
  return (T.M * x).cwiseProduct(y).sum();
}

double pair_theta(const PairingOperator& T, double theta,
                  const Eigen::VectorXcd& x, const Eigen::VectorXcd& y) {
  const Scalar s = pair(T, x, y);
  return std::cos(theta) * s.real() + std::sin(theta) * s.imag();
}

double pair_scale(const PairingOperator& T, const Eigen::VectorXcd& x,
                  const Eigen::VectorXcd& y) {
  return 1.0 + T.op_norm * x.norm() * y.norm();
}

OrthResult is_T_orthogonal(const PairingOperator& T, const Eigen::VectorXcd& x,
                           const Eigen::VectorXcd& y, double tol) {
  const double gap = std::abs(pair(T, x, y)) / pair_scale(T, x, y);
  return {gap <= tol, gap, std::nullopt};
}

OrthResult is_T_theta_orthogonal(const PairingOperator& T, double theta,
                                 const Eigen::VectorXcd& x,
                                 const Eigen::VectorXcd& y, double tol) {
  const double gap = std::abs(pair_theta(T, theta, x, y)) / pair_scale(T, x, y);
  return {gap <= tol, gap, std::nullopt};
}

ThetaDirection theta_direction(const PairingOperator& T,
                               const Eigen::VectorXcd& x,
                               const Eigen::VectorXcd& y) {
  const Scalar s = pair(T, x, y);
  if (std::abs(s) <= 1e-14 * pair_scale(T, x, y)) return {0.0, true};
  // cos(theta) a + sin(theta) b = 0 at theta = atan2(a, -b); of the two
  // solutions mod 2pi this one matches the catalog operators.
  return {wrap_angle(std::atan2(s.real(), -s.imag())), false};
}

SignClass sign_class(const PairingOperator& T, double theta,
                     const Eigen::VectorXcd& x, const Eigen::VectorXcd& y,
                     double tol) {
  const double pt = pair_theta(T, theta, x, y);
  if (std::abs(pt) <= tol * pair_scale(T, x, y)) return SignClass::Zero;
  return pt > 0.0 ? SignClass::Plus : SignClass::Minus;
}

OrthResult is_isotropic(const PairingOperator& T, const Eigen::VectorXcd& x,
                        double tol) {
  check_dims(T, x, "is_isotropic");
  const double scale = 1.0 + T.op_norm * x.squaredNorm();
  const double gap = std::abs(pair(T, x, x)) / scale;
  return {gap <= tol, gap, std::nullopt};
}

std::vector<Eigen::VectorXcd> functional_kernel_basis(
    const Eigen::VectorXcd& u) {
  const Eigen::Index n = u.size();
  if (u.norm() == 0.0)
    throw std::invalid_argument("functional_kernel_basis: zero functional");
  // {y : u^T y = 0} equals the Hermitian complement of conj(u); the trailing
  // n-1 columns of the Householder Q of conj(u) span it orthonormally.
  Eigen::MatrixXcd col = u.conjugate();
  col.resize(n, 1);
  const Eigen::HouseholderQR<Eigen::MatrixXcd> qr(col);
  const Eigen::MatrixXcd Q = qr.householderQ();
  std::vector<Eigen::VectorXcd> basis;
  basis.reserve(static_cast<size_t>(n - 1));
  for (Eigen::Index k = 1; k < n; ++k) basis.push_back(Q.col(k));
  return basis;
}

std::vector<Eigen::VectorXcd> t_perp_basis(const PairingOperator& T,
                                           const Eigen::VectorXcd& x) {
  check_dims(T, x, "t_perp_basis");
  const Eigen::VectorXcd u = T.M * x;
  if (u.norm() <= 1e-12 * (1.0 + T.op_norm * x.norm()))
    throw std::invalid_argument(
        "t_perp_basis: Tx = 0, the perp set is the whole space");
  return functional_kernel_basis(u);
}

}  // namespace banach_ortho
