#include "banach_ortho/preserve.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "banach_ortho/sampling.hpp"

namespace banach_ortho {

namespace {

void check_endo(const PairingOperator& T, const EndoOperator& A) {
  if (A.A.rows() != A.A.cols())
    throw std::invalid_argument("endomorphism matrix must be square");
  if (A.A.rows() != T.M.rows())
    throw std::invalid_argument(
        "endomorphism dimension does not match the pairing");
  if (A.field != T.field)
    throw std::invalid_argument(
        "endomorphism and pairing live over different fields");
}

bool full_rank(const Eigen::MatrixXcd& A) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(A);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return false;
  return sv(sv.size() - 1) > 1e-10 * sv(0);
}

Eigen::VectorXcd kernel_combination(Rng& rng,
                                    const std::vector<Eigen::VectorXcd>& basis,
                                    ScalarField field) {
  const int m = static_cast<int>(basis.size());
  for (int attempt = 0; attempt < 8; ++attempt) {
    const Eigen::VectorXcd c = sample_gaussian_vector(rng, m, field);
    Eigen::VectorXcd y = Eigen::VectorXcd::Zero(basis.front().size());
    for (int i = 0; i < m; ++i) y += c(i) * basis[i];
    if (y.norm() > 1e-8) return y;
  }
  return basis.front();
}

}  // namespace

PairingOperator adjoint_conjugate(const PairingOperator& T,
                                  const EndoOperator& A) {
  check_endo(T, A);
  return make_pairing(A.A.transpose() * T.M * A.A, T.field);
}

double isometry_defect(const PairingOperator& T, const EndoOperator& A) {
  check_endo(T, A);
  const double nm = T.M.norm();
  if (nm == 0.0) return 0.0;
  return (A.A.transpose() * T.M * A.A - T.M).norm() / nm;
}

bool is_T_isometry(const PairingOperator& T, const EndoOperator& A,
                   double tol) {
  return isometry_defect(T, A) <= tol;
}

std::optional<Scalar> preserver_scalar(const PairingOperator& T,
                                       const EndoOperator& A, double tol) {
  check_endo(T, A);
  const Eigen::MatrixXcd G = A.A.transpose() * T.M * A.A;
  const double gn2 = G.squaredNorm();
  if (gn2 <= 1e-300) return std::nullopt;
  const Scalar beta = G.conjugate().cwiseProduct(T.M).sum() / gn2;
  const double residual = (beta * G - T.M).norm();
  if (residual <= tol * std::max(T.M.norm(), 1e-300)) return beta;
  return std::nullopt;
}

PreserveReport preserves_T_orthogonality_sampled(const PairingOperator& T,
                                                 const EndoOperator& A,
                                                 int samples, uint64_t seed,
                                                 double tol) {
  check_endo(T, A);
  const Eigen::Index n = T.M.rows();
  PreserveReport report;
  report.conclusive = T.bijective && full_rank(A.A);
  report.holds = true;
  if (n < 2) return report;

  const PairingOperator Tp = adjoint_conjugate(T, A);
  Rng rng(seed);
  for (int s = 0; s < samples; ++s) {
    const Eigen::VectorXcd x =
        sample_gaussian_vector(rng, static_cast<int>(n), T.field);

    // x perp_T y by construction; violation means Ax not perp_T Ay.
    Eigen::VectorXcd y;
    if ((T.M * x).norm() <= 1e-12 * (1.0 + T.op_norm * x.norm()))
      y = sample_gaussian_vector(rng, static_cast<int>(n), T.field);
    else
      y = kernel_combination(rng, t_perp_basis(T, x), T.field);
    if (is_T_orthogonal(T, x, y, tol).verdict) {
      const OrthResult image = is_T_orthogonal(T, A.A * x, A.A * y, tol);
      if (!image.verdict) {
        report.holds = false;
        report.conclusive = true;
        report.counterexample = PreserveCounterexample{x, y, true, image.gap};
        return report;
      }
    }

    // Converse: Ax perp_T Ay (x in the kernel of the conjugated pairing at x)
    // but x not perp_T y.
    Eigen::VectorXcd yc;
    if ((Tp.M * x).norm() <= 1e-12 * (1.0 + Tp.op_norm * x.norm()))
      yc = sample_gaussian_vector(rng, static_cast<int>(n), T.field);
    else
      yc = kernel_combination(rng, t_perp_basis(Tp, x), T.field);
    if (is_T_orthogonal(Tp, x, yc, tol).verdict) {
      const OrthResult source = is_T_orthogonal(T, x, yc, tol);
      if (!source.verdict) {
        report.holds = false;
        report.conclusive = true;
        report.counterexample =
            PreserveCounterexample{x, yc, false, source.gap};
        return report;
      }
    }
  }
  return report;
}

FitReport hilbert_fit(const PNormSpace& space, int samples, uint64_t seed) {
  const int n = space.n;
  if (n < 2) throw std::invalid_argument("hilbert_fit: need n >= 2");
  if (!(space.p > 1.0) || std::isinf(space.p))
    throw std::invalid_argument("hilbert_fit: need 1 < p < inf");
  if (samples < n * n)
    throw std::invalid_argument(
        "hilbert_fit: need at least n^2 samples for a determined system");

  Rng rng(seed);
  Eigen::MatrixXcd C(samples, n * n);
  for (int k = 0; k < samples; ++k) {
    Eigen::VectorXcd x;
    do {
      x = sample_gaussian_vector(rng, n, space.field);
    } while (x.norm() <= 1e-8);
    x /= x.norm();
    const Eigen::VectorXcd f = support_functional(space, x);
    Eigen::VectorXcd y = kernel_combination(rng, functional_kernel_basis(f),
                                            space.field);
    y /= y.norm();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) C(k, i + n * j) = y(i) * x(j);
  }

  FitReport report;
  report.p = space.p;
  report.samples = samples;
  report.seed = seed;
  report.field = space.field;
  if (space.field == ScalarField::Real) {
    const Eigen::MatrixXd Cr = C.real();
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(
        Cr, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    report.residual = sv(sv.size() - 1);
    const Eigen::VectorXd m = svd.matrixV().col(n * n - 1);
    report.m_fit =
        Eigen::Map<const Eigen::MatrixXd>(m.data(), n, n).cast<Scalar>();
  } else {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(
        C, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    report.residual = sv(sv.size() - 1);
    const Eigen::VectorXcd m = svd.matrixV().col(n * n - 1);
    report.m_fit = Eigen::Map<const Eigen::MatrixXcd>(m.data(), n, n);
  }
  return report;
}

RotationReport rotation_bj_deviation(double p, int samples, uint64_t seed) {
  if (!(p >= 1.0)) throw std::invalid_argument("rotation check: need p >= 1");
  const PNormSpace space{2, p, ScalarField::Real};
  Rng rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  RotationReport report;
  for (int s = 0; s < samples; ++s) {
    double a = 0.0, b = 0.0;
    do {
      a = gauss(rng);
      b = gauss(rng);
    } while (std::hypot(a, b) <= 1e-8);
    Eigen::VectorXcd x(2), y(2);
    x << Scalar(a, 0), Scalar(b, 0);
    y << Scalar(b, 0), Scalar(-a, 0);
    const double gap = is_bj_orthogonal(space, x, y).gap;
    if (!report.witness || gap > report.max_gap) {
      report.max_gap = gap;
      report.witness = std::make_pair(a, b);
    }
  }
  return report;
}

TwoDimReport two_dim_hilbert_conditions(const PNormSpace& space,
                                        const PairingOperator& T,
                                        const Eigen::VectorXcd& u,
                                        const Eigen::VectorXcd& v, int samples,
                                        uint64_t seed, double tol) {
  if (space.n != 2 || space.field != ScalarField::Real)
    throw std::invalid_argument(
        "two_dim_hilbert_conditions: real two-dimensional space required");
  if (T.M.rows() != 2)
    throw std::invalid_argument(
        "two_dim_hilbert_conditions: pairing dimension must be 2");
  if (u.size() != 2 || v.size() != 2)
    throw std::invalid_argument("two_dim_hilbert_conditions: need 2-vectors");
  if (std::abs(p_norm(space, u) - 1.0) > 1e-6 ||
      std::abs(p_norm(space, v) - 1.0) > 1e-6)
    throw std::invalid_argument(
        "two_dim_hilbert_conditions: u and v must be unit vectors");

  TwoDimReport report;
  auto add = [&](const std::string& id, double ratio) {
    report.conditions.push_back(
        ConditionResult{id, ratio, ratio <= 1.0});
  };

  add("bj-uv", is_bj_orthogonal(space, u, v, tol).gap / tol);
  add("bj-vu", is_bj_orthogonal(space, v, u, tol).gap / tol);
  add("bj-diag", is_bj_orthogonal(space, u + v, u - v, tol).gap / tol);

  Rng rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  double worst_identity = 0.0;
  for (int s = 0; s < samples; ++s) {
    const double g = gauss(rng);
    const double d = gauss(rng);
    const double k = gauss(rng);
    const double n1 = p_norm(space, (g + k * d) * u + (d - k * g) * v);
    const double n2 = p_norm(space, (g - k * d) * u + (d + k * g) * v);
    const double rel = std::abs(n1 - n2) / std::max({n1, n2, 1e-300});
    worst_identity = std::max(worst_identity, rel / tol);
  }
  add("norm-identity", worst_identity);

  if (space_properties(space).smooth) {
    double worst = 0.0;
    for (int s = 0; s < samples; ++s) {
      Eigen::VectorXcd a;
      do {
        a = sample_gaussian_vector(rng, 2, space.field);
      } while (a.norm() <= 1e-8);
      const auto bj_kernel =
          functional_kernel_basis(support_functional(space, a));
      worst = std::max(worst,
                       is_T_orthogonal(T, a, bj_kernel.front(), tol).gap / tol);
      if ((T.M * a).norm() > 1e-12 * (1.0 + T.op_norm * a.norm())) {
        const auto t_kernel = t_perp_basis(T, a);
        worst = std::max(
            worst, bj_functional_gap(space, a, t_kernel.front()) / tol);
      }
    }
    add("t-vs-bj", worst);
  }

  report.all_pass = true;
  for (const auto& c : report.conditions) report.all_pass &= c.pass;
  return report;
}

StructureReport lp_pairing_structure_check(const PairingOperator& T,
                                           double tol) {
  if (T.M.rows() != 2)
    throw std::invalid_argument(
        "lp_pairing_structure_check: 2 x 2 pairing required");
  StructureReport report;
  const double scale =
      std::max(T.M.cwiseAbs().maxCoeff(), std::numeric_limits<double>::min());
  report.offdiag_rel =
      std::max(std::abs(T.M(0, 1)), std::abs(T.M(1, 0))) / scale;
  report.diagonal = report.offdiag_rel <= tol;
  const double dmax = std::max(
      {std::abs(T.M(0, 0)), std::abs(T.M(1, 1)),
       std::numeric_limits<double>::min()});
  report.diag_spread_rel = std::abs(T.M(0, 0) - T.M(1, 1)) / dmax;
  report.equal_diagonal = report.diag_spread_rel <= tol;
  return report;
}

}  // namespace banach_ortho
