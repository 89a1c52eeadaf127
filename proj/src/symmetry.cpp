#include "banach_ortho/symmetry.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace banach_ortho {

namespace {

constexpr double kPi = std::numbers::pi;

double wrap_angle(double theta) {
  const double two_pi = 2.0 * kPi;
  double t = std::fmod(theta, two_pi);
  if (t < 0.0) t += two_pi;
  if (t >= two_pi) t = 0.0;
  return t;
}

// Real coefficient vector of y -> cos(theta) Re(u^T y) + sin(theta) Im(u^T y)
// over (Re y; Im y) in R^{2n}. Isometric and real-linear in u.
Eigen::VectorXd theta_coefficients(const Eigen::VectorXcd& u, double theta) {
  const Eigen::Index n = u.size();
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  Eigen::VectorXd w(2 * n);
  for (Eigen::Index j = 0; j < n; ++j) {
    const double a = u[j].real();
    const double b = u[j].imag();
    w[j] = c * a + s * b;
    w[n + j] = s * a - c * b;
  }
  return w;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << v;
  return os.str();
}

}  // namespace

Eigen::VectorXcd reversed_functional(const PairingOperator& T,
                                     const Eigen::VectorXcd& x) {
  if (x.size() != T.M.rows())
    throw std::invalid_argument(
        "reversed_functional: dimension does not match the operator");
  return T.M.transpose() * x;
}

SymmetryVerdict analyze_symmetry(const PairingOperator& T,
                                 const Eigen::VectorXcd& x, double tol) {
  const Eigen::VectorXcd u = T.M * x;
  const Eigen::VectorXcd v = reversed_functional(T, x);
  const double zero_scale = tol * (1.0 + T.op_norm * x.norm());
  const bool zu = u.norm() <= zero_scale;
  const bool zv = v.norm() <= zero_scale;

  SymmetryVerdict verdict;
  if (zu && zv) {
    verdict.left = true;
    verdict.right = true;
    verdict.certificate =
        "Tx = 0 and the reversed functional vanishes: both relations hold "
        "against every y";
    return verdict;
  }
  if (zu) {
    verdict.left = false;
    verdict.right = true;
    verdict.certificate =
        "Tx = 0 but the reversed functional is nonzero: x is orthogonal to "
        "everything while some y is not orthogonal to x";
    return verdict;
  }
  if (zv) {
    verdict.left = true;
    verdict.right = false;
    verdict.certificate =
        "reversed functional vanishes while Tx != 0: left holds trivially, "
        "right fails, and no finite scalar links the pairings";
    return verdict;
  }

  // Both functionals nonzero: nested kernels reduce to collinearity.
  const Scalar cv = u.dot(v) / u.squaredNorm();
  const double res_left = (v - cv * u).norm() / v.norm();
  const Scalar cu = v.dot(u) / v.squaredNorm();
  const double res_right = (u - cu * v).norm() / u.norm();
  verdict.left = res_left < tol;
  verdict.right = res_right < tol;
  if (verdict.left && std::abs(cv) > 0.0) {
    // v = cv u, so (Tx, y) = (1/cv) (Ty, x) for all y; confirm on the basis.
    const Scalar lambda = Scalar(1.0, 0.0) / cv;
    if ((u - lambda * v).norm() <= 1e-10 * (1.0 + u.norm()))
      verdict.lambda = lambda;
  }
  std::ostringstream cert;
  cert << "collinearity residuals: reversed-vs-forward " << fmt(res_left)
       << ", forward-vs-reversed " << fmt(res_right);
  verdict.certificate = cert.str();
  return verdict;
}

SymmetryVerdict is_left_symmetric_at(const PairingOperator& T,
                                     const Eigen::VectorXcd& x, double tol) {
  return analyze_symmetry(T, x, tol);
}

SymmetryVerdict is_right_symmetric_at(const PairingOperator& T,
                                      const Eigen::VectorXcd& x, double tol) {
  return analyze_symmetry(T, x, tol);
}

Scalar symmetry_scalar(const PairingOperator& T, const Eigen::VectorXcd& x,
                       double tol) {
  const SymmetryVerdict verdict = analyze_symmetry(T, x, tol);
  if (!verdict.left)
    throw std::invalid_argument("symmetry_scalar: x is not left symmetric");
  if (!verdict.lambda)
    throw std::invalid_argument(
        "symmetry_scalar: scalar undetermined (Tx or the reversed functional "
        "vanishes)");
  return *verdict.lambda;
}

bool is_theta_left_symmetric_at(const PairingOperator& T, double theta,
                                const Eigen::VectorXcd& x, double tol) {
  if (T.field == ScalarField::Real) {
    const double t = wrap_angle(theta);
    if (std::min(std::abs(t - 0.0), std::abs(t - kPi)) > 1e-12 &&
        std::abs(t - 2.0 * kPi) > 1e-12)
      throw std::invalid_argument(
          "is_theta_left_symmetric_at: real field admits only theta in "
          "{0, pi}");
  }
  const Eigen::VectorXcd u = T.M * x;
  const Eigen::VectorXcd v = reversed_functional(T, x);
  const Eigen::VectorXd wu = theta_coefficients(u, theta);
  const Eigen::VectorXd wv = theta_coefficients(v, theta);
  const double zero_scale = tol * (1.0 + T.op_norm * x.norm());
  if (wu.norm() <= zero_scale) return wv.norm() <= zero_scale;
  if (wv.norm() <= zero_scale) return true;
  const double r = wu.dot(wv) / wu.squaredNorm();
  return (wv - r * wu).norm() < tol * wv.norm();
}

bool is_operator_symmetric(const PairingOperator& T, double tol) {
  const double nm = T.M.norm();
  if (nm == 0.0) return true;
  return (T.M - T.M.transpose()).norm() <= tol * nm;
}

std::optional<Eigen::VectorXcd> find_nonisotropic(const PairingOperator& T,
                                                  double tol) {
  const Eigen::Index n = T.M.rows();
  const Eigen::MatrixXcd S = T.M + T.M.transpose();
  const double m_scale =
      std::max(T.M.cwiseAbs().maxCoeff(), std::numeric_limits<double>::min());
  if (S.cwiseAbs().maxCoeff() <= tol * m_scale) return std::nullopt;

  std::vector<Eigen::VectorXcd> candidates;
  Eigen::Index best_diag = 0;
  for (Eigen::Index i = 1; i < n; ++i)
    if (std::abs(S(i, i)) > std::abs(S(best_diag, best_diag))) best_diag = i;
  if (std::abs(S(best_diag, best_diag)) > tol * m_scale)
    candidates.push_back(Eigen::VectorXcd::Unit(n, best_diag));

  Eigen::Index bi = 0, bj = 1;
  double best_off = -1.0;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j)
      if (std::abs(S(i, j)) > best_off) {
        best_off = std::abs(S(i, j));
        bi = i;
        bj = j;
      }
  if (n >= 2 && best_off > tol * m_scale) {
    candidates.push_back(Eigen::VectorXcd::Unit(n, bi) +
                         Eigen::VectorXcd::Unit(n, bj));
    candidates.push_back(Eigen::VectorXcd::Unit(n, bi) -
                         Eigen::VectorXcd::Unit(n, bj));
  }
  for (const auto& cand : candidates)
    if (!is_isotropic(T, cand, tol).verdict) return cand;
  return std::nullopt;
}

HalfspaceReport halfspace_symmetry_check(const PairingOperator& T,
                                         const Eigen::VectorXcd& x,
                                         int samples, uint64_t seed,
                                         double tol) {
  const SymmetryVerdict verdict = analyze_symmetry(T, x, tol);
  HalfspaceReport report;

  if (!verdict.left) {
    // Definitional violation: a y that x is orthogonal to while the reversed
    // pairing is nonzero; at theta = arg(reversed value) + pi the reversed
    // direction class is strictly negative although y sits in the plus class
    // of x for every angle.
    const Eigen::VectorXcd u = T.M * x;
    const Eigen::VectorXcd v = reversed_functional(T, x);
    Eigen::VectorXcd y;
    if (u.norm() <= tol * (1.0 + T.op_norm * x.norm())) {
      y = v.conjugate();  // (Ty, x) = ||v||^2 > 0 while (Tx, .) = 0
    } else {
      const auto basis = functional_kernel_basis(u);
      double best = -1.0;
      for (const auto& b : basis) {
        const double val = std::abs(v.cwiseProduct(b).sum());
        if (val > best) {
          best = val;
          y = b;
        }
      }
    }
    const Scalar rev = v.cwiseProduct(y).sum();
    const double theta = wrap_angle(std::arg(rev) + kPi);
    report.holds = false;
    report.counterexample = HalfspaceCounterexample{
        theta, y,
        "pairing of x against y is zero, so y lies in every sign class of x, "
        "but the reversed pairing at this angle is strictly negative"};
    return report;
  }

  if (verdict.lambda) report.phi0 = wrap_angle(std::arg(*verdict.lambda));

  Rng rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
  const Eigen::Index n = x.size();
  for (int s = 0; s < samples; ++s) {
    const double theta = angle(rng);
    Eigen::VectorXcd y(n);
    for (Eigen::Index i = 0; i < n; ++i)
      y[i] = T.field == ScalarField::Complex
                 ? Scalar(gauss(rng), gauss(rng))
                 : Scalar(gauss(rng), 0.0);
    const SignClass forward = sign_class(T, theta, x, y, tol);
    if (forward == SignClass::Zero) continue;
    // Reversed class: when no scalar exists the reversed functional is zero
    // and the class is Zero for every angle.
    SignClass reversed = SignClass::Zero;
    if (report.phi0)
      reversed = sign_class(T, theta - *report.phi0, y, x, tol);
    const bool ok = forward == SignClass::Plus
                        ? reversed != SignClass::Minus
                        : reversed != SignClass::Plus;
    if (!ok) {
      report.holds = false;
      report.counterexample = HalfspaceCounterexample{
          theta, y, "sign class not transported to the shifted angle"};
      return report;
    }
  }
  report.holds = true;
  return report;
}

}  // namespace banach_ortho
