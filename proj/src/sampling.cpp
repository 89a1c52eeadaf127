#include "banach_ortho/sampling.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace banach_ortho {

namespace {

Scalar gaussian_scalar(Rng& rng, ScalarField field) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  const double re = gauss(rng);
  return field == ScalarField::Complex ? Scalar(re, gauss(rng))
                                       : Scalar(re, 0.0);
}

// Quadratic form x^T M x (bilinear, no conjugation).
Scalar quad(const Eigen::MatrixXcd& M, const Eigen::VectorXcd& x) {
  return (x.transpose() * M * x).value();
}

}  // namespace

Eigen::VectorXcd sample_gaussian_vector(Rng& rng, int n, ScalarField field) {
  Eigen::VectorXcd x(n);
  for (int i = 0; i < n; ++i) x(i) = gaussian_scalar(rng, field);
  return x;
}

Eigen::MatrixXcd sample_gaussian_matrix(Rng& rng, int n, ScalarField field) {
  Eigen::MatrixXcd G(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) G(i, j) = gaussian_scalar(rng, field);
  return G;
}

Eigen::MatrixXcd sample_symmetric_matrix(Rng& rng, int n, ScalarField field) {
  const Eigen::MatrixXcd G = sample_gaussian_matrix(rng, n, field);
  return 0.5 * (G + G.transpose());
}

Eigen::MatrixXcd sample_antisymmetric_matrix(Rng& rng, int n,
                                             ScalarField field) {
  const Eigen::MatrixXcd G = sample_gaussian_matrix(rng, n, field);
  return 0.5 * (G - G.transpose());
}

Eigen::MatrixXcd sample_invertible_matrix(Rng& rng, int n, ScalarField field) {
  const Eigen::HouseholderQR<Eigen::MatrixXcd> qr1(
      sample_gaussian_matrix(rng, n, field));
  const Eigen::HouseholderQR<Eigen::MatrixXcd> qr2(
      sample_gaussian_matrix(rng, n, field));
  const Eigen::MatrixXcd Q1 = qr1.householderQ();
  const Eigen::MatrixXcd Q2 = qr2.householderQ();
  std::uniform_real_distribution<double> unif(0.5, 1.5);
  Eigen::VectorXcd d(n);
  for (int i = 0; i < n; ++i) d(i) = Scalar(unif(rng), 0.0);
  return Q1 * d.asDiagonal() * Q2;
}

Eigen::MatrixXcd sample_transpose_orthogonal(Rng& rng, int n,
                                             ScalarField field) {
  Eigen::MatrixXcd K = sample_antisymmetric_matrix(rng, n, field);
  // Keep ||K|| < 1 so I + K stays invertible for complex K as well.
  const double nk = K.norm();
  if (nk > 0.5) K *= 0.5 / nk;
  const Eigen::MatrixXcd I = Eigen::MatrixXcd::Identity(n, n);
  return (I - K) * (I + K).inverse();
}

std::optional<Eigen::VectorXcd> sample_isotropic_vector(
    Rng& rng, const Eigen::MatrixXcd& M, ScalarField field, int attempts) {
  const int n = static_cast<int>(M.rows());
  if (M.rows() != M.cols())
    throw std::invalid_argument("sample_isotropic_vector: square matrix only");
  const double m_scale = std::max(M.norm(), 1e-300);
  for (int attempt = 0; attempt < attempts; ++attempt) {
    const Eigen::VectorXcd a = sample_gaussian_vector(rng, n, field);
    const Eigen::VectorXcd b = sample_gaussian_vector(rng, n, field);
    // Q(a + t b) = Q(a) + t (a^T M b + b^T M a) + t^2 Q(b).
    const Scalar alpha = quad(M, b);
    const Scalar beta =
        (a.transpose() * M * b).value() + (b.transpose() * M * a).value();
    const Scalar gamma = quad(M, a);
    std::vector<Scalar> roots;
    if (std::abs(alpha) > 1e-12 * m_scale) {
      const Scalar disc = beta * beta - 4.0 * alpha * gamma;
      if (field == ScalarField::Real && disc.real() < 0.0) continue;
      const Scalar sq = std::sqrt(disc);
      roots.push_back((-beta + sq) / (2.0 * alpha));
      roots.push_back((-beta - sq) / (2.0 * alpha));
    } else if (std::abs(beta) > 1e-12 * m_scale) {
      roots.push_back(-gamma / beta);
    } else {
      continue;
    }
    for (const Scalar& t : roots) {
      Eigen::VectorXcd x = a + t * b;
      const double nx = x.norm();
      if (nx <= 1e-6 * (1.0 + std::abs(t))) continue;
      x /= nx;
      if (std::abs(quad(M, x)) <= 1e-10 * (1.0 + m_scale)) return x;
    }
  }
  return std::nullopt;
}

PointInstance sample_collinear_at_isotropic(Rng& rng, int n, ScalarField field,
                                            Scalar r) {
  if (n < 2)
    throw std::invalid_argument("point instance sampling needs n >= 2");
  if (std::abs(r) == 0.0)
    throw std::invalid_argument("collinearity ratio must be nonzero");
  if (field == ScalarField::Real && std::abs(r.imag()) > 0.0)
    throw std::invalid_argument("real field needs a real ratio");

  Eigen::VectorXcd x = sample_gaussian_vector(rng, n, field);
  while (x.norm() <= 1e-4) x = sample_gaussian_vector(rng, n, field);
  const double c = x.squaredNorm();
  const Eigen::VectorXcd xb = x.conjugate();

  Eigen::VectorXcd u;
  do {
    u = sample_gaussian_vector(rng, n, field);
    u -= xb * (u.transpose() * x).value() / c;  // force u^T x = 0
  } while (u.norm() <= 1e-4);

  const Eigen::MatrixXcd P =
      Eigen::MatrixXcd::Identity(n, n) - x * xb.transpose() / c;
  const Eigen::MatrixXcd W = sample_gaussian_matrix(rng, n, field);
  PointInstance inst;
  inst.M = (u * xb.transpose() + r * xb * u.transpose()) / c +
           P.transpose() * W * P;
  inst.x = x;
  inst.r = r;
  return inst;
}

PointInstance sample_symmetric_point(Rng& rng, int n, ScalarField field) {
  if (n < 2)
    throw std::invalid_argument("point instance sampling needs n >= 2");
  Eigen::VectorXcd x;
  Scalar c2;
  do {
    x = sample_gaussian_vector(rng, n, field);
    c2 = (x.transpose() * x).value();
  } while (std::abs(c2) < 0.3 * x.squaredNorm() || x.norm() <= 1e-4);

  Eigen::VectorXcd u;
  do {
    u = sample_gaussian_vector(rng, n, field);
  } while (std::abs((u.transpose() * x).value()) < 0.05 * u.norm() * x.norm());
  const Scalar ux = (u.transpose() * x).value();

  const Eigen::MatrixXcd P =
      Eigen::MatrixXcd::Identity(n, n) - x * x.transpose() / c2;
  const Eigen::MatrixXcd W = sample_gaussian_matrix(rng, n, field);
  PointInstance inst;
  inst.M = (u * x.transpose() + x * u.transpose()) / c2 -
           x * ux * x.transpose() / (c2 * c2) + P * W * P;
  inst.x = x;
  inst.r = Scalar(1.0, 0.0);
  return inst;
}

IsometryInstance sample_t_isometry(Rng& rng, int n, ScalarField field,
                                   bool scaled) {
  const Eigen::MatrixXcd R = sample_invertible_matrix(rng, n, field);
  const Eigen::MatrixXcd Q = sample_transpose_orthogonal(rng, n, field);
  Scalar c(1.0, 0.0);
  if (scaled) {
    std::uniform_real_distribution<double> mag(0.5, 2.0);
    if (field == ScalarField::Complex) {
      std::uniform_real_distribution<double> phase(0.0,
                                                   2.0 * std::numbers::pi);
      c = std::polar(mag(rng), phase(rng));
    } else {
      std::bernoulli_distribution flip(0.5);
      c = Scalar(flip(rng) ? -mag(rng) : mag(rng), 0.0);
    }
  }
  IsometryInstance inst;
  inst.M = R.transpose() * R;
  inst.A = c * R.inverse() * Q * R;
  inst.c = c;
  inst.beta = Scalar(1.0, 0.0) / (c * c);
  return inst;
}

}  // namespace banach_ortho
