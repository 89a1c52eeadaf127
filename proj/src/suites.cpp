#include "banach_ortho/suites.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

#include "banach_ortho/fixtures.hpp"
#include "banach_ortho/json_io.hpp"
#include "banach_ortho/sampling.hpp"

namespace banach_ortho {

namespace {

constexpr double kPi = std::numbers::pi;

using PropertyFn = std::function<double(Rng&, int, json&)>;

struct Prop {
  const char* id;
  int pin;  // 0: use the suite trial count
  uint64_t offset;
  PropertyFn fn;
};

ScalarField field_of(int t) {
  return t % 2 == 0 ? ScalarField::Real : ScalarField::Complex;
}

int dim_of(int t) {
  static const int dims[3] = {2, 3, 4};
  return dims[t % 3];
}

double smooth_p_of(int t) {
  static const double ps[5] = {1.2, 1.5, 2.0, 3.0, 4.0};
  return ps[t % 5];
}

double uniform(Rng& rng, double lo, double hi) {
  std::uniform_real_distribution<double> dist(lo, hi);
  return dist(rng);
}

double sample_theta(Rng& rng, ScalarField field) {
  if (field == ScalarField::Real)
    return std::bernoulli_distribution(0.5)(rng) ? kPi : 0.0;
  return uniform(rng, 0.0, 2.0 * kPi);
}

PairingOperator random_pairing(Rng& rng, int n, ScalarField field) {
  return make_pairing(sample_gaussian_matrix(rng, n, field), field);
}

PairingOperator bijective_pairing(Rng& rng, int n, ScalarField field) {
  return make_pairing(sample_invertible_matrix(rng, n, field), field);
}

Eigen::VectorXcd nonzero_gaussian(Rng& rng, int n, ScalarField field) {
  Eigen::VectorXcd x = sample_gaussian_vector(rng, n, field);
  while (x.norm() <= 1e-6) x = sample_gaussian_vector(rng, n, field);
  return x;
}

Eigen::VectorXcd kernel_vector(Rng& rng,
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

Scalar collinearity_ratio(Rng& rng, ScalarField field, bool force_real,
                          bool negative_real) {
  const double rho = uniform(rng, 0.5, 2.0);
  if (field == ScalarField::Complex && !force_real) {
    double phi = uniform(rng, 0.3, kPi - 0.3);
    if (std::bernoulli_distribution(0.5)(rng)) phi += kPi;
    return std::polar(rho, phi);
  }
  const bool neg = negative_real || std::bernoulli_distribution(0.5)(rng);
  return Scalar(neg ? -rho : rho, 0.0);
}

// (M, x) with x clearly nonisotropic; generic random instance.
std::pair<PairingOperator, Eigen::VectorXcd> random_nonisotropic(
    Rng& rng, int n, ScalarField field) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    const PairingOperator T = random_pairing(rng, n, field);
    for (int inner = 0; inner < 8; ++inner) {
      const Eigen::VectorXcd x = nonzero_gaussian(rng, n, field);
      if (is_isotropic(T, x).gap > 1e-4) return {T, x};
    }
  }
  throw std::runtime_error("nonisotropic instance sampling failed");
}

void note(json& ce, int trial, const char* what, double ratio) {
  ce = json::object();
  ce["trial"] = trial;
  ce["check"] = what;
  ce["ratio"] = ratio;
}

// Accumulates the worst ratio and captures the first offending check.
struct Worst {
  int trial;
  json* ce;
  double ratio = 0.0;
  void add(const char* what, double r) {
    if (r > ratio) ratio = r;
    if (r > 1.0 && ce->is_null()) note(*ce, trial, what, r);
  }
  void require(const char* what, bool ok) { add(what, ok ? 0.0 : 2.0); }
};

// ---------------------------------------------------------------- basic ----

double prop_theta_exists(Rng& rng, int t, json& ce) {
  const ScalarField field = field_of(t);
  const PairingOperator T = random_pairing(rng, dim_of(t), field);
  const Eigen::VectorXcd x = nonzero_gaussian(rng, T.M.rows(), field);
  const Eigen::VectorXcd y = nonzero_gaussian(rng, T.M.rows(), field);
  const ThetaDirection dir = theta_direction(T, x, y);
  const double ratio = std::abs(pair_theta(T, dir.theta, x, y)) /
                       (1e-10 * pair_scale(T, x, y));
  if (ratio > 1.0 && ce.is_null()) {
    note(ce, t, "direction angle does not annihilate the pairing", ratio);
    ce["operator"] = operator_to_json(T);
    ce["x"] = vector_to_json(x, field);
    ce["y"] = vector_to_json(y, field);
  }
  return ratio;
}

double prop_two_angle_determination(Rng& rng, int t, json& ce) {
  const ScalarField field = field_of(t);
  const PairingOperator T = random_pairing(rng, dim_of(t), field);
  const Eigen::VectorXcd x = nonzero_gaussian(rng, T.M.rows(), field);
  const Eigen::VectorXcd y = nonzero_gaussian(rng, T.M.rows(), field);
  double theta = 0.0, phi = 0.0;
  do {
    theta = uniform(rng, 0.0, 2.0 * kPi);
    phi = uniform(rng, 0.0, 2.0 * kPi);
  } while (std::abs(std::sin(phi - theta)) < 0.1);
  const double pt = pair_theta(T, theta, x, y);
  const double pp = pair_theta(T, phi, x, y);
  const double det = std::sin(phi - theta);
  const Scalar recon((pt * std::sin(phi) - pp * std::sin(theta)) / det,
                     (pp * std::cos(theta) - pt * std::cos(phi)) / det);
  const double bound =
      1e-10 * pair_scale(T, x, y) * (1.0 + 2.0 / std::abs(det));
  Worst w{t, &ce};
  w.add("two direction components determine the pairing",
        std::abs(recon - pair(T, x, y)) / bound);
  return w.ratio;
}

double prop_t_implies_theta(Rng& rng, int t, json& ce) {
  const ScalarField field = field_of(t);
  const int n = dim_of(t);
  PairingOperator T = random_pairing(rng, n, field);
  Eigen::VectorXcd x = nonzero_gaussian(rng, n, field);
  while ((T.M * x).norm() <= 1e-8 * (1.0 + T.op_norm * x.norm()))
    x = nonzero_gaussian(rng, n, field);
  const Eigen::VectorXcd y = kernel_vector(rng, t_perp_basis(T, x), field);
  const double theta = uniform(rng, 0.0, 2.0 * kPi);
  Worst w{t, &ce};
  w.add("plain orthogonality forces every direction component to vanish",
        std::abs(pair_theta(T, theta, x, y)) /
            (1e-10 * pair_scale(T, x, y)));
  return w.ratio;
}

double prop_phase_identity(Rng& rng, int t, json& ce) {
  const ScalarField field = field_of(t);
  const PairingOperator T = random_pairing(rng, dim_of(t), field);
  const Eigen::VectorXcd x = nonzero_gaussian(rng, T.M.rows(), field);
  const Eigen::VectorXcd y = nonzero_gaussian(rng, T.M.rows(), field);
  const double theta = uniform(rng, 0.0, 2.0 * kPi);
  const double phi = sample_theta(rng, field);
  const Scalar rot = std::polar(1.0, phi);
  const double base = pair_theta(T, theta - phi, x, y);
  const double bound = 1e-10 * pair_scale(T, x, y);
  Worst w{t, &ce};
  w.add("rotating y matches shifting the angle",
        std::abs(pair_theta(T, theta, x, rot * y) - base) / bound);
  w.add("rotating x matches shifting the angle",
        std::abs(pair_theta(T, theta, rot * x, y) - base) / bound);
  return w.ratio;
}

double prop_right_additivity(Rng& rng, int t, json& ce) {
  const ScalarField field = field_of(t);
  const PairingOperator T = random_pairing(rng, dim_of(t), field);
  const Eigen::VectorXcd x = nonzero_gaussian(rng, T.M.rows(), field);
  const Eigen::VectorXcd y = nonzero_gaussian(rng, T.M.rows(), field);
  const Eigen::VectorXcd z = nonzero_gaussian(rng, T.M.rows(), field);
  const double bound =
      1e-10 * (pair_scale(T, x, y) + pair_scale(T, x, z));
  Worst w{t, &ce};
  w.add("pairing is additive in the right slot",
        std::abs(pair(T, x, y + z) - pair(T, x, y) - pair(T, x, z)) / bound);
  return w.ratio;
}

double prop_left_additivity(Rng& rng, int t, json& ce) {
  const ScalarField field = field_of(t);
  const PairingOperator T = random_pairing(rng, dim_of(t), field);
  const Eigen::VectorXcd x = nonzero_gaussian(rng, T.M.rows(), field);
  const Eigen::VectorXcd y = nonzero_gaussian(rng, T.M.rows(), field);
  const Eigen::VectorXcd z = nonzero_gaussian(rng, T.M.rows(), field);
  const double bound =
      1e-10 * (pair_scale(T, x, z) + pair_scale(T, y, z));
  Worst w{t, &ce};
  w.add("pairing is additive in the left slot",
        std::abs(pair(T, x + y, z) - pair(T, x, z) - pair(T, y, z)) / bound);
  return w.ratio;
}

double prop_bilinearity(Rng& rng, int t, json& ce) {
  const ScalarField field = field_of(t);
  const PairingOperator T = random_pairing(rng, dim_of(t), field);
  const Eigen::VectorXcd x = nonzero_gaussian(rng, T.M.rows(), field);
  const Eigen::VectorXcd y = nonzero_gaussian(rng, T.M.rows(), field);
  const Scalar a = nonzero_gaussian(rng, 1, field)(0);
  const Scalar b = nonzero_gaussian(rng, 1, field)(0);
  const double bound =
      1e-10 * (1.0 + std::abs(a * b)) * pair_scale(T, x, y);
  Worst w{t, &ce};
  w.add("pairing scales bilinearly with no conjugation",
        std::abs(pair(T, a * x, b * y) - a * b * pair(T, x, y)) / bound);
  return w.ratio;
}

double prop_duality_roundtrip(Rng& rng, int t, json& ce) {
  const PNormSpace space{dim_of(t), smooth_p_of(t), field_of(t)};
  const Eigen::VectorXcd x = nonzero_gaussian(rng, space.n, space.field);
  const Eigen::VectorXcd z = inverse_duality(space, support_functional(space, x));
  Worst w{t, &ce};
  w.add("inverse duality recovers the normalized vector",
        (z - x / p_norm(space, x)).norm() / 1e-10);
  return w.ratio;
}

// Orthogonal-or-clearly-not pair: y = kernel vector + s x with s = 0 or
// |s| >= 0.05, so both deciders sit far from their thresholds.
struct BjPair {
  Eigen::VectorXcd x;
  Eigen::VectorXcd y;
  bool orthogonal;
};

BjPair structured_bj_pair(Rng& rng, const PNormSpace& space, bool orthogonal) {
  Eigen::VectorXcd x = nonzero_gaussian(rng, space.n, space.field);
  x /= p_norm(space, x);
  Eigen::VectorXcd y =
      kernel_vector(rng, functional_kernel_basis(support_functional(space, x)),
                    space.field);
  y /= p_norm(space, y);
  if (!orthogonal) {
    double s = uniform(rng, 0.05, 1.0);
    if (std::bernoulli_distribution(0.5)(rng)) s = -s;
    y += s * x;
  }
  return BjPair{std::move(x), std::move(y), orthogonal};
}

double prop_bj_oracle_equivalence(Rng& rng, int t, json& ce) {
  static const double ps[3] = {1.2, 2.0, 4.0};
  static const int ns[2] = {2, 5};
  const PNormSpace space{ns[(t / 3) % 2], ps[t % 3], field_of(t)};
  const BjPair bp = structured_bj_pair(rng, space, t % 2 == 0);
  const bool via_min = is_bj_orthogonal(space, bp.x, bp.y).verdict;
  const bool via_functional = bj_functional_gap(space, bp.x, bp.y) <= 1e-8;
  Worst w{t, &ce};
  w.require("minimization and support-functional verdicts agree",
            via_min == via_functional);
  w.require("verdict matches the construction", via_min == bp.orthogonal);
  return w.ratio;
}

double prop_bj_homogeneity(Rng& rng, int t, json& ce) {
  const PNormSpace space{dim_of(t), smooth_p_of(t), field_of(t)};
  const BjPair bp = structured_bj_pair(rng, space, t % 2 == 0);
  const Scalar a = nonzero_gaussian(rng, 1, space.field)(0);
  const Scalar b = nonzero_gaussian(rng, 1, space.field)(0);
  const BjMinimum base = bj_minimize(space, bp.x, bp.y);
  const BjMinimum scaled = bj_minimize(space, a * bp.x, b * bp.y);
  Worst w{t, &ce};
  w.add("minimum value scales with |a|",
        std::abs(scaled.value - std::abs(a) * base.value) /
            (1e-8 * (1.0 + std::abs(a) * base.value)));
  w.require("verdict is scale invariant",
            is_bj_orthogonal(space, a * bp.x, b * bp.y).verdict ==
                is_bj_orthogonal(space, bp.x, bp.y).verdict);
  return w.ratio;
}

double prop_bj_convexity(Rng& rng, int t, json& ce) {
  const PNormSpace space{dim_of(t), smooth_p_of(t), field_of(t)};
  const Eigen::VectorXcd x = nonzero_gaussian(rng, space.n, space.field);
  const Eigen::VectorXcd y = nonzero_gaussian(rng, space.n, space.field);
  const double R = 2.0 * p_norm(space, x) / p_norm(space, y);
  auto draw = [&]() {
    return space.field == ScalarField::Complex
               ? Scalar(uniform(rng, -R, R), uniform(rng, -R, R))
               : Scalar(uniform(rng, -R, R), 0.0);
  };
  const Scalar l1 = draw();
  const Scalar l2 = draw();
  const double lhs = p_norm(space, x + ((l1 + l2) / 2.0) * y);
  const double rhs =
      (p_norm(space, x + l1 * y) + p_norm(space, x + l2 * y)) / 2.0 + 1e-12;
  Worst w{t, &ce};
  w.add("norm along the search line is midpoint convex", lhs / rhs);
  return w.ratio;
}

double prop_inverse_duality_perp(Rng& rng, int t, json& ce) {
  const PNormSpace space{dim_of(t), smooth_p_of(t), field_of(t)};
  const Eigen::VectorXcd x = nonzero_gaussian(rng, space.n, space.field);
  const Eigen::VectorXcd f = support_functional(space, x);
  const Eigen::VectorXcd z = inverse_duality(space, f);
  const Eigen::VectorXcd y =
      kernel_vector(rng, functional_kernel_basis(f), space.field);
  Worst w{t, &ce};
  w.add("attainment direction is orthogonal to the functional kernel",
        bj_functional_gap(space, z, y) / 1e-8);
  w.require("minimization confirms the orthogonality",
            is_bj_orthogonal(space, z, y).verdict);
  return w.ratio;
}

// ------------------------------------------------------------- symmetry ----

double prop_theorem_i(Rng& rng, int t, json& ce) {
  const ScalarField field = field_of(t);
  const int n = dim_of(t);
  Worst w{t, &ce};
  if (t % 2 == 0) {
    const auto [T, x] = random_nonisotropic(rng, n, field);
    const SymmetryVerdict verdict = analyze_symmetry(T, x);
    w.require("left and right agree at a nonisotropic point",
              verdict.left == verdict.right);
  } else {
    const PointInstance inst = sample_symmetric_point(rng, n, field);
    const PairingOperator T = make_pairing(inst.M, field);
    const SymmetryVerdict verdict = analyze_symmetry(T, inst.x);
    w.require("constructed point is left symmetric", verdict.left);
    w.require("left and right agree at a nonisotropic point",
              verdict.left == verdict.right);
    w.require("constructed point is nonisotropic",
              is_isotropic(T, inst.x).gap > 1e-4);
  }
  return w.ratio;
}

double prop_theorem_ii(Rng& rng, int t, json& ce) {
  const ScalarField field = field_of(t);
  const int n = dim_of(t);
  Worst w{t, &ce};
  if (t % 2 == 0) {
    const PairingOperator T = bijective_pairing(rng, n, field);
    const auto x = sample_isotropic_vector(rng, T.M, field);
    if (x) {
      const SymmetryVerdict verdict = analyze_symmetry(T, *x);
      w.require("left and right agree at an isotropic point of a bijection",
                verdict.left == verdict.right);
      return w.ratio;
    }
    // No isotropic vector over the reals: fall through to the built family.
  }
  PairingOperator T = make_pairing(Eigen::MatrixXcd::Identity(n, n), field);
  PointInstance inst;
  for (int attempt = 0; attempt < 16; ++attempt) {
    inst = sample_collinear_at_isotropic(
        rng, n, field, collinearity_ratio(rng, field, false, false));
    T = make_pairing(inst.M, field);
    if (T.bijective) break;
  }
  w.require("construction produced a bijective pairing", T.bijective);
  w.require("constructed point is isotropic",
            is_isotropic(T, inst.x).verdict);
  const SymmetryVerdict verdict = analyze_symmetry(T, inst.x);
  w.require("constructed point is left symmetric", verdict.left);
  w.require("left and right agree at an isotropic point of a bijection",
            verdict.left == verdict.right);
  return w.ratio;
}

double prop_lemma_lambda_one(Rng& rng, int t, json& ce) {
  const ScalarField field = field_of(t);
  const PointInstance inst = sample_symmetric_point(rng, dim_of(t), field);
  const PairingOperator T = make_pairing(inst.M, field);
  const Eigen::VectorXcd u = T.M * inst.x;
  const Eigen::VectorXcd v = reversed_functional(T, inst.x);
  const SymmetryVerdict verdict = analyze_symmetry(T, inst.x);
  Worst w{t, &ce};
  w.require("nonisotropic symmetric point carries a scalar",
            verdict.left && verdict.lambda.has_value());
  w.add("forward and reversed functionals coincide",
        (u - v).norm() / (1e-8 * (1.0 + u.norm())));
  if (verdict.lambda)
    w.add("scalar equals one",
          std::abs(*verdict.lambda - Scalar(1.0, 0.0)) / 1e-6);
  return w.ratio;
}

double prop_symm_identity(Rng& rng, int t, json& ce) {
  const ScalarField field = field_of(t);
  const int n = dim_of(t);
  PointInstance inst;
  if (t % 2 == 0)
    inst = sample_symmetric_point(rng, n, field);
  else
    inst = sample_collinear_at_isotropic(
        rng, n, field, collinearity_ratio(rng, field, false, false));
  const PairingOperator T = make_pairing(inst.M, field);
  const Scalar lambda = symmetry_scalar(T, inst.x);
  const double phi0 = std::arg(lambda);
  Worst w{t, &ce};
  for (int k = 0; k < 100; ++k) {
    const Eigen::VectorXcd y = nonzero_gaussian(rng, n, field);
    const double theta = uniform(rng, 0.0, 2.0 * kPi);
    const double lhs = pair_theta(T, theta, inst.x, y);
    const double rhs =
        std::abs(lambda) * pair_theta(T, theta - phi0, y, inst.x);
    w.add("direction components transport through the scalar",
          std::abs(lhs - rhs) / (1e-10 * pair_scale(T, inst.x, y)));
  }
  return w.ratio;
}

double prop_nonisotropic_biconditional(Rng& rng, int t, json& ce) {
  const ScalarField field = field_of(t);
  const int n = dim_of(t);
  Eigen::MatrixXcd M;
  switch (t % 3) {
    case 0:
      M = sample_symmetric_matrix(rng, n, field);
      break;
    case 1:
      M = sample_gaussian_matrix(rng, n, field);
      break;
    default:
      M = sample_antisymmetric_matrix(rng, n, field);
      break;
  }
  if (M.norm() <= 1e-8) M = Eigen::MatrixXcd::Identity(n, n);
  const PairingOperator T = make_pairing(M, field);
  const bool symmetric = is_operator_symmetric(T);
  const auto witness = find_nonisotropic(T);
  const bool both = witness && analyze_symmetry(T, *witness).left;
  Worst w{t, &ce};
  w.require(
      "operator symmetry matches nonisotropic witness plus point symmetry",
      symmetric == both);
  return w.ratio;
}

double prop_definition_soundness(Rng& rng, int t, json& ce) {
  const ScalarField field = field_of(t);
  const int n = dim_of(t);
  PairingOperator T = make_pairing(Eigen::MatrixXcd::Identity(n, n), field);
  Eigen::VectorXcd x;
  if (t % 2 == 0) {
    const PointInstance inst = sample_symmetric_point(rng, n, field);
    T = make_pairing(inst.M, field);
    x = inst.x;
  } else {
    T = random_pairing(rng, n, field);
    x = nonzero_gaussian(rng, n, field);
    while ((T.M * x).norm() <= 1e-8 * (1.0 + T.op_norm * x.norm()))
      x = nonzero_gaussian(rng, n, field);
  }
  const Eigen::VectorXcd v = reversed_functional(T, x);
  const SymmetryVerdict verdict = analyze_symmetry(T, x);
  const auto basis = t_perp_basis(T, x);
  double max_rev = 0.0;
  for (const auto& b : basis)
    max_rev = std::max(max_rev, std::abs(v.cwiseProduct(b).sum()));
  for (int k = 0; k < 8; ++k) {
    Eigen::VectorXcd y = kernel_vector(rng, basis, field);
    y /= y.norm();
    max_rev = std::max(max_rev, std::abs(v.cwiseProduct(y).sum()));
  }
  Worst w{t, &ce};
  if (verdict.left)
    w.add("left verdict means the kernel annihilates the reversed functional",
          max_rev / (1e-7 * (1.0 + v.norm())));
  else
    w.add("non-left verdict is witnessed inside the kernel",
          (1e-6 * (1.0 + v.norm())) / std::max(max_rev, 1e-300));
  return w.ratio;
}

double prop_halfspace_forward(Rng& rng, int t, json& ce) {
  const ScalarField field = field_of(t);
  const int n = dim_of(t);
  PointInstance inst;
  if (t % 2 == 0)
    inst = sample_symmetric_point(rng, n, field);
  else
    inst = sample_collinear_at_isotropic(
        rng, n, field, collinearity_ratio(rng, field, false, false));
  const PairingOperator T = make_pairing(inst.M, field);
  const uint64_t inner_seed = rng();
  const HalfspaceReport report =
      halfspace_symmetry_check(T, inst.x, 50, inner_seed);
  Worst w{t, &ce};
  w.require("sign classes transport at a left-symmetric point", report.holds);
  w.require("scalar phase is reported", report.phi0.has_value());
  return w.ratio;
}

double prop_halfspace_converse(Rng& rng, int t, json& ce) {
  const ScalarField field = field_of(t);
  const int n = dim_of(t);
  PairingOperator T = random_pairing(rng, n, field);
  Eigen::VectorXcd x = nonzero_gaussian(rng, n, field);
  while (analyze_symmetry(T, x).left) {
    T = random_pairing(rng, n, field);
    x = nonzero_gaussian(rng, n, field);
  }
  const HalfspaceReport report = halfspace_symmetry_check(T, x, 50, rng());
  Worst w{t, &ce};
  w.require("transport fails at a non-left-symmetric point", !report.holds);
  w.require("violation is constructed", report.counterexample.has_value());
  if (report.counterexample) {
    const auto& cx = *report.counterexample;
    const double scale = pair_scale(T, x, cx.y);
    w.add("forward component of the violation is zero",
          std::abs(pair_theta(T, cx.theta, x, cx.y)) / (1e-8 * scale));
    const double reversed = pair_theta(T, cx.theta, cx.y, x);
    w.add("reversed component of the violation is strictly negative",
          reversed < 0.0 ? (1e-8 * scale) / (-reversed) : 2.0);
  }
  return w.ratio;
}

double prop_real_corollary(Rng& rng, int t, json& ce) {
  const int n = dim_of(t);
  PointInstance inst;
  if (t % 2 == 0)
    inst = sample_symmetric_point(rng, n, ScalarField::Real);
  else
    inst = sample_collinear_at_isotropic(
        rng, n, ScalarField::Real,
        collinearity_ratio(rng, ScalarField::Real, true, true));
  const PairingOperator T = make_pairing(inst.M, ScalarField::Real);
  const Scalar lambda = symmetry_scalar(T, inst.x);
  Worst w{t, &ce};
  w.require("real instance carries a real scalar",
            std::abs(lambda.imag()) <= 1e-10 * (1.0 + std::abs(lambda)));
  for (int k = 0; k < 20; ++k) {
    const Eigen::VectorXcd y = nonzero_gaussian(rng, n, ScalarField::Real);
    const double pf = pair(T, inst.x, y).real();
    const double pr = pair(T, y, inst.x).real();
    const double scale = pair_scale(T, inst.x, y);
    w.add("pairing transports through the real scalar",
          std::abs(pf - lambda.real() * pr) / (1e-10 * scale));
    if (std::abs(pr) > 1e-6 * scale)
      w.require("sign flips exactly when the scalar is negative",
                (pf > 0) == ((lambda.real() > 0) == (pr > 0)) ||
                    std::abs(pf) <= 1e-10 * scale);
  }
  return w.ratio;
}

// ------------------------------------------------------------ direction ----

double prop_theta_implies_left(Rng& rng, int t, json& ce) {
  const ScalarField field = field_of(t);
  const int n = dim_of(t);
  Worst w{t, &ce};
  switch (t % 3) {
    case 0: {  // real ratio: theta-left holds, left must follow
      PointInstance inst;
      if (field == ScalarField::Real)
        inst = sample_symmetric_point(rng, n, field);
      else
        inst = sample_collinear_at_isotropic(
            rng, n, field, collinearity_ratio(rng, field, true, false));
      const PairingOperator T = make_pairing(inst.M, field);
      const double theta = sample_theta(rng, field);
      const bool theta_left = is_theta_left_symmetric_at(T, theta, inst.x);
      w.require("real-ratio point is direction left symmetric", theta_left);
      w.require("direction left symmetry implies plain left symmetry",
                !theta_left || analyze_symmetry(T, inst.x).left);
      break;
    }
    case 1: {  // nonreal ratio: left holds but no direction symmetry
      if (field == ScalarField::Real) {
        const auto [T, x] = random_nonisotropic(rng, n, field);
        const bool theta_left =
            is_theta_left_symmetric_at(T, sample_theta(rng, field), x);
        w.require("direction left symmetry implies plain left symmetry",
                  !theta_left || analyze_symmetry(T, x).left);
        break;
      }
      const PointInstance inst = sample_collinear_at_isotropic(
          rng, n, field, collinearity_ratio(rng, field, false, false));
      const PairingOperator T = make_pairing(inst.M, field);
      const double theta = sample_theta(rng, field);
      const bool theta_left = is_theta_left_symmetric_at(T, theta, inst.x);
      w.require("nonreal ratio defeats direction left symmetry", !theta_left);
      w.require("plain left symmetry still holds",
                analyze_symmetry(T, inst.x).left);
      break;
    }
    default: {  // generic instance: material implication
      const PairingOperator T = random_pairing(rng, n, field);
      const Eigen::VectorXcd x = nonzero_gaussian(rng, n, field);
      const bool theta_left =
          is_theta_left_symmetric_at(T, sample_theta(rng, field), x);
      w.require("direction left symmetry implies plain left symmetry",
                !theta_left || analyze_symmetry(T, x).left);
      break;
    }
  }
  return w.ratio;
}

double prop_real_lambda_converse(Rng& rng, int t, json& ce) {
  const ScalarField field = field_of(t);
  const int n = dim_of(t);
  PointInstance inst;
  if (t % 2 == 0 || field == ScalarField::Real)
    inst = sample_symmetric_point(rng, n, field);
  else
    inst = sample_collinear_at_isotropic(
        rng, n, field, collinearity_ratio(rng, field, true, false));
  const PairingOperator T = make_pairing(inst.M, field);
  Worst w{t, &ce};
  w.require("instance is left symmetric", analyze_symmetry(T, inst.x).left);
  for (int k = 0; k < 5; ++k)
    w.require("real scalar gives direction left symmetry at every angle",
              is_theta_left_symmetric_at(T, sample_theta(rng, field), inst.x));
  return w.ratio;
}

double prop_fixture_converse(Rng&, int t, json& ce) {
  const PairingOperator T = fixture_operator("direction-example");
  Eigen::VectorXcd x(2);
  x << Scalar(1.0, 0.0), Scalar(0.0, 0.0);
  Eigen::VectorXcd y(2);
  y << Scalar(1.0, 0.0), Scalar(0.0, 1.0);
  Worst w{t, &ce};
  w.require("fixture point is left symmetric", analyze_symmetry(T, x).left);
  w.require("direction symmetry fails at pi/2",
            !is_theta_left_symmetric_at(T, kPi / 2.0, x));
  w.add("witness is orthogonal in the pi/2 direction",
        std::abs(pair_theta(T, kPi / 2.0, x, y)) / 1e-10);
  w.add("witness is not orthogonal in the reversed direction",
        1e-6 / std::abs(pair_theta(T, kPi / 2.0, y, x)));
  return w.ratio;
}

// ------------------------------------------------------------ preserver ----

double prop_isometry_positive(Rng& rng, int t, json& ce) {
  const ScalarField field = field_of(t);
  const int n = dim_of(t);
  const bool scaled = t % 2 == 1;
  const IsometryInstance inst = sample_t_isometry(rng, n, field, scaled);
  const PairingOperator T = make_pairing(inst.M, field);
  const EndoOperator A{inst.A, field};
  const auto beta = preserver_scalar(T, A);
  Worst w{t, &ce};
  w.require("preserver scalar is found", beta.has_value());
  if (beta)
    w.add("preserver scalar matches the construction",
          std::abs(*beta - inst.beta) / (1e-6 * (1.0 + std::abs(inst.beta))));
  if (!scaled)
    w.add("unit-scale instance is an isometry",
          isometry_defect(T, A) / 1e-8);
  const PreserveReport report =
      preserves_T_orthogonality_sampled(T, A, 500, rng());
  w.require("sampled preservation holds", report.holds);
  w.require("verdict is conclusive", report.conclusive);
  return w.ratio;
}

double prop_random_negative(Rng& rng, int t, json& ce) {
  const ScalarField field = field_of(t);
  const int n = dim_of(t);
  const PairingOperator T = bijective_pairing(rng, n, field);
  EndoOperator A{sample_gaussian_matrix(rng, n, field), field};
  while (preserver_scalar(T, A))
    A.A = sample_gaussian_matrix(rng, n, field);
  const PreserveReport report =
      preserves_T_orthogonality_sampled(T, A, 500, rng());
  Worst w{t, &ce};
  w.require("random endomorphism is caught", !report.holds);
  w.require("counterexample is attached", report.counterexample.has_value());
  if (report.counterexample) {
    const auto& cx = *report.counterexample;
    if (cx.forward) {
      w.require("counterexample source pair is orthogonal",
                is_T_orthogonal(T, cx.x, cx.y).verdict);
      w.require("counterexample image pair is not orthogonal",
                !is_T_orthogonal(T, A.A * cx.x, A.A * cx.y).verdict);
    } else {
      w.require("counterexample image pair is orthogonal",
                is_T_orthogonal(adjoint_conjugate(T, A), cx.x, cx.y).verdict);
      w.require("counterexample source pair is not orthogonal",
                !is_T_orthogonal(T, cx.x, cx.y).verdict);
    }
  }
  return w.ratio;
}

double prop_functoriality(Rng& rng, int t, json& ce) {
  const ScalarField field = field_of(t);
  const int n = dim_of(t);
  const PairingOperator T = random_pairing(rng, n, field);
  const EndoOperator A{sample_gaussian_matrix(rng, n, field), field};
  const EndoOperator B{sample_gaussian_matrix(rng, n, field), field};
  const EndoOperator AB{A.A * B.A, field};
  const Eigen::MatrixXcd direct = adjoint_conjugate(T, AB).M;
  const Eigen::MatrixXcd nested =
      adjoint_conjugate(adjoint_conjugate(T, A), B).M;
  Worst w{t, &ce};
  w.add("conjugation composes contravariantly",
        (direct - nested).norm() /
            (1e-10 * (1.0 + direct.norm() + nested.norm())));
  return w.ratio;
}

double prop_isometry_flag(Rng& rng, int t, json& ce) {
  const ScalarField field = field_of(t);
  const int n = dim_of(t);
  Worst w{t, &ce};
  if (t % 2 == 0) {
    const IsometryInstance inst = sample_t_isometry(rng, n, field, false);
    const PairingOperator T = make_pairing(inst.M, field);
    w.add("unit-scale instance passes the isometry test",
          isometry_defect(T, EndoOperator{inst.A, field}) / 1e-8);
  } else {
    IsometryInstance inst = sample_t_isometry(rng, n, field, true);
    while (std::abs(inst.c * inst.c - Scalar(1.0, 0.0)) < 0.1)
      inst = sample_t_isometry(rng, n, field, true);
    const PairingOperator T = make_pairing(inst.M, field);
    const double defect = isometry_defect(T, EndoOperator{inst.A, field});
    w.add("scaled instance fails the isometry test", 1e-4 / defect);
    w.require("flag agrees with the defect",
              !is_T_isometry(T, EndoOperator{inst.A, field}));
  }
  return w.ratio;
}

double prop_singular_inconclusive(Rng& rng, int t, json& ce) {
  const ScalarField field = field_of(t);
  const int n = dim_of(t);
  Worst w{t, &ce};
  if (t % 2 == 0) {
    // Rank-one pairing preserved exactly by a dilation: holds but inconclusive.
    const Eigen::VectorXcd wv = nonzero_gaussian(rng, n, field);
    const Eigen::VectorXcd zv = nonzero_gaussian(rng, n, field);
    const PairingOperator T = make_pairing(wv * zv.transpose(), field);
    const Scalar alpha = nonzero_gaussian(rng, 1, field)(0);
    const EndoOperator A{
        alpha * Eigen::MatrixXcd::Identity(n, n), field};
    const PreserveReport report =
        preserves_T_orthogonality_sampled(T, A, 100, rng());
    w.require("dilation preserves the rank-one pairing", report.holds);
    w.require("singular pairing downgrades the verdict", !report.conclusive);
  } else {
    // Singular endomorphism against a bijective pairing: caught conclusively.
    const PairingOperator T = bijective_pairing(rng, n, field);
    Eigen::MatrixXcd A = sample_gaussian_matrix(rng, n, field);
    A.col(n - 1) = A.col(0);  // rank deficient
    const PreserveReport report = preserves_T_orthogonality_sampled(
        T, EndoOperator{A, field}, 500, rng());
    w.require("singular endomorphism is caught", !report.holds);
    w.require("a found violation is conclusive", report.conclusive);
  }
  return w.ratio;
}

// -------------------------------------------------------------- hilbert ----

uint64_t g_suite_seed = 42;  // set by run_suite before property execution

double prop_fit_l2_real(Rng&, int t, json& ce) {
  const PNormSpace space{t == 0 ? 2 : 3, 2.0, ScalarField::Real};
  const FitReport fit = hilbert_fit(space, 200, g_suite_seed);
  Worst w{t, &ce};
  w.add("euclidean fit residual is tiny", fit.residual / 1e-8);
  return w.ratio;
}

double prop_fit_lp_floor(Rng&, int t, json& ce) {
  const PNormSpace space{2, t == 0 ? 1.5 : 3.0, ScalarField::Real};
  const FitReport fit = hilbert_fit(space, 200, g_suite_seed);
  Worst w{t, &ce};
  w.add("non-euclidean fit residual stays above the floor",
        0.01 / std::max(fit.residual, 1e-300));
  return w.ratio;
}

double prop_fit_complex_floor(Rng&, int t, json& ce) {
  const PNormSpace space{2, 2.0, ScalarField::Complex};
  const FitReport fit = hilbert_fit(space, 200, g_suite_seed);
  Worst w{t, &ce};
  w.add("complex euclidean pairs admit no bilinear pairing",
        0.01 / std::max(fit.residual, 1e-300));
  return w.ratio;
}

double prop_rotation_p2(Rng&, int t, json& ce) {
  const RotationReport report = rotation_bj_deviation(2.0, 200, g_suite_seed);
  Worst w{t, &ce};
  w.add("rotated euclidean pairs stay orthogonal", report.max_gap / 1e-10);
  return w.ratio;
}

double prop_rotation_p_witness(Rng&, int t, json& ce) {
  const double p = t == 0 ? 1.5 : 3.0;
  const RotationReport report = rotation_bj_deviation(p, 200, g_suite_seed);
  Worst w{t, &ce};
  w.require("a witness is reported", report.witness.has_value());
  w.add("rotation breaks orthogonality away from p = 2",
        1e-3 / std::max(report.max_gap, 1e-300));
  return w.ratio;
}

double prop_p1_rotation_witness(Rng&, int t, json& ce) {
  const RotationReport report = rotation_bj_deviation(1.0, 200, g_suite_seed);
  Worst w{t, &ce};
  w.require("a witness is reported", report.witness.has_value());
  w.add("rotation breaks orthogonality at p = 1",
        1e-3 / std::max(report.max_gap, 1e-300));
  return w.ratio;
}

TwoDimReport two_dim_for(double p, uint64_t seed) {
  const PNormSpace space{2, p, ScalarField::Real};
  const PairingOperator T =
      make_pairing(Eigen::MatrixXcd::Identity(2, 2), ScalarField::Real);
  Eigen::VectorXcd u(2), v(2);
  u << Scalar(1.0, 0.0), Scalar(0.0, 0.0);
  v << Scalar(0.0, 0.0), Scalar(1.0, 0.0);
  return two_dim_hilbert_conditions(space, T, u, v, 200, seed);
}

double prop_two_dim_euclidean(Rng&, int t, json& ce) {
  const TwoDimReport report = two_dim_for(2.0, g_suite_seed);
  Worst w{t, &ce};
  w.require("every euclidean condition passes", report.all_pass);
  for (const auto& c : report.conditions)
    w.add(c.id.c_str(), c.max_violation);
  return w.ratio;
}

double prop_two_dim_l4_violation(Rng&, int t, json& ce) {
  const TwoDimReport report = two_dim_for(4.0, g_suite_seed);
  Worst w{t, &ce};
  w.require("the quartic space fails the battery", !report.all_pass);
  for (const auto& c : report.conditions) {
    if (c.id == "norm-identity")
      w.add("norm identity is violated well above tolerance",
            0.01 / std::max(c.max_violation * 1e-8, 1e-300));
    else if (c.id == "t-vs-bj")
      w.require("the euclidean pairing mismatches quartic orthogonality",
                !c.pass);
    else
      w.require("mutual orthogonality of the axes still holds", c.pass);
  }
  return w.ratio;
}

double prop_structure(Rng& rng, int t, json& ce) {
  Worst w{t, &ce};
  if (t % 3 == 0) {
    const double a = uniform(rng, 0.5, 2.0);
    const StructureReport r = lp_pairing_structure_check(
        make_pairing(a * Eigen::MatrixXcd::Identity(2, 2),
                     ScalarField::Real));
    w.require("scaled identity is diagonal with equal entries",
              r.diagonal && r.equal_diagonal);
  } else if (t % 3 == 1) {
    Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(2, 2);
    M(0, 0) = 1.0;
    M(1, 1) = 2.0;
    const StructureReport r =
        lp_pairing_structure_check(make_pairing(M, ScalarField::Real));
    w.require("unequal diagonal is detected",
              r.diagonal && !r.equal_diagonal);
  } else {
    const StructureReport r =
        lp_pairing_structure_check(fixture_operator("prop-basic-c2"));
    w.require("off-diagonal mass is detected", !r.diagonal);
  }
  return w.ratio;
}

double prop_fit_roundtrip_mfit(Rng& rng, int t, json& ce) {
  const PNormSpace space{2, 2.0, ScalarField::Real};
  const FitReport fit = hilbert_fit(space, 200, g_suite_seed);
  Worst w{t, &ce};
  const double lead = fit.m_fit(0, 0).real();
  const double sign = lead >= 0.0 ? 1.0 : -1.0;
  const Eigen::MatrixXcd target =
      sign / std::sqrt(2.0) * Eigen::MatrixXcd::Identity(2, 2);
  w.add("fitted pairing is the normalized identity",
        (fit.m_fit - target).norm() / 1e-6);
  const PairingOperator T = make_pairing(sign * fit.m_fit, ScalarField::Real);
  for (int k = 0; k < 10; ++k) {
    const Eigen::VectorXcd x = nonzero_gaussian(rng, 2, ScalarField::Real);
    const Eigen::VectorXcd y =
        kernel_vector(rng, t_perp_basis(T, x), ScalarField::Real);
    w.add("pairs orthogonal under the fitted pairing are norm orthogonal",
          bj_functional_gap(space, x, y) / 1e-6);
  }
  return w.ratio;
}

// ------------------------------------------------------------- registry ----

const std::vector<Prop>& basic_props() {
  static const std::vector<Prop> props = {
      {"theta-exists", 0, 1, prop_theta_exists},
      {"two-angle-determination", 0, 2, prop_two_angle_determination},
      {"t-implies-theta", 0, 3, prop_t_implies_theta},
      {"phase-identity", 0, 4, prop_phase_identity},
      {"right-additivity", 0, 5, prop_right_additivity},
      {"left-additivity", 0, 6, prop_left_additivity},
      {"bilinearity", 0, 7, prop_bilinearity},
      {"duality-roundtrip", 0, 8, prop_duality_roundtrip},
      {"bj-oracle-equivalence", 0, 9, prop_bj_oracle_equivalence},
      {"bj-homogeneity", 0, 10, prop_bj_homogeneity},
      {"bj-convexity", 0, 11, prop_bj_convexity},
      {"inverse-duality-perp", 0, 12, prop_inverse_duality_perp},
  };
  return props;
}

const std::vector<Prop>& symmetry_props() {
  static const std::vector<Prop> props = {
      {"theorem-i-nonisotropic", 500, 20, prop_theorem_i},
      {"theorem-ii-isotropic-bijective", 500, 21, prop_theorem_ii},
      {"lemma-lambda-one", 0, 22, prop_lemma_lambda_one},
      {"prop-symm-identity", 100, 23, prop_symm_identity},
      {"nonisotropic-biconditional", 200, 24, prop_nonisotropic_biconditional},
      {"definition-soundness", 0, 25, prop_definition_soundness},
      {"halfspace-forward", 0, 26, prop_halfspace_forward},
      {"halfspace-converse", 0, 27, prop_halfspace_converse},
      {"real-corollary", 0, 28, prop_real_corollary},
  };
  return props;
}

const std::vector<Prop>& direction_props() {
  static const std::vector<Prop> props = {
      {"theta-implies-left", 500, 40, prop_theta_implies_left},
      {"real-lambda-converse", 0, 41, prop_real_lambda_converse},
      {"fixture-converse", 1, 42, prop_fixture_converse},
  };
  return props;
}

const std::vector<Prop>& preserver_props() {
  static const std::vector<Prop> props = {
      {"isometry-positive", 100, 60, prop_isometry_positive},
      {"random-negative", 100, 61, prop_random_negative},
      {"functoriality", 0, 62, prop_functoriality},
      {"isometry-flag", 0, 63, prop_isometry_flag},
      {"singular-inconclusive", 0, 64, prop_singular_inconclusive},
  };
  return props;
}

const std::vector<Prop>& hilbert_props() {
  static const std::vector<Prop> props = {
      {"fit-l2-real", 2, 80, prop_fit_l2_real},
      {"fit-lp-floor", 2, 81, prop_fit_lp_floor},
      {"fit-complex-floor", 1, 82, prop_fit_complex_floor},
      {"rotation-p2", 1, 83, prop_rotation_p2},
      {"rotation-p-witness", 2, 84, prop_rotation_p_witness},
      {"p1-rotation-witness", 1, 85, prop_p1_rotation_witness},
      {"two-dim-euclidean", 1, 86, prop_two_dim_euclidean},
      {"two-dim-l4-violation", 1, 87, prop_two_dim_l4_violation},
      {"structure", 3, 88, prop_structure},
      {"fit-roundtrip-mfit", 1, 89, prop_fit_roundtrip_mfit},
  };
  return props;
}

void run_props(SuiteReport& report, const std::vector<Prop>& props,
               uint64_t seed, int trials) {
  for (const auto& prop : props) {
    const int count = prop.pin > 0 ? prop.pin : trials;
    Rng rng(seed + prop.offset);
    PropertyResult result;
    result.id = prop.id;
    result.trials = count;
    result.counterexample = json(nullptr);
    for (int t = 0; t < count; ++t) {
      json ce = json(nullptr);
      const double ratio = prop.fn(rng, t, ce);
      result.max_violation = std::max(result.max_violation, ratio);
      if (ratio > 1.0) {
        ++result.failures;
        if (result.counterexample.is_null())
          result.counterexample =
              ce.is_null() ? json{{"trial", t}, {"ratio", ratio}} : ce;
      }
    }
    report.total_failures += result.failures;
    report.properties.push_back(std::move(result));
  }
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "basic", "symmetry", "direction", "preserver", "hilbert", "all"};
  return names;
}

SuiteReport run_suite(const std::string& name, uint64_t seed, int trials) {
  if (trials < 1) throw std::invalid_argument("trials must be positive");
  SuiteReport report;
  report.suite = name;
  report.seed = seed;
  report.trials = trials;
  g_suite_seed = seed;
  if (name == "basic") {
    run_props(report, basic_props(), seed, trials);
  } else if (name == "symmetry") {
    run_props(report, symmetry_props(), seed, trials);
  } else if (name == "direction") {
    run_props(report, direction_props(), seed, trials);
  } else if (name == "preserver") {
    run_props(report, preserver_props(), seed, trials);
  } else if (name == "hilbert") {
    run_props(report, hilbert_props(), seed, trials);
  } else if (name == "all") {
    run_props(report, basic_props(), seed, trials);
    run_props(report, symmetry_props(), seed, trials);
    run_props(report, direction_props(), seed, trials);
    run_props(report, preserver_props(), seed, trials);
    run_props(report, hilbert_props(), seed, trials);
  } else {
    throw std::invalid_argument("unknown suite: " + name);
  }
  return report;
}

json suite_report_to_json(const SuiteReport& report) {
  json properties = json::array();
  for (const auto& p : report.properties) {
    json e;
    e["id"] = p.id;
    e["trials"] = p.trials;
    e["failures"] = p.failures;
    e["max_violation"] = p.max_violation;
    e["counterexample"] = p.counterexample;
    properties.push_back(std::move(e));
  }
  json j;
  j["suite"] = report.suite;
  j["seed"] = report.seed;
  j["trials"] = report.trials;
  j["total_failures"] = report.total_failures;
  j["properties"] = std::move(properties);
  j["wall_time_ms"] = nullptr;
  return j;
}

}  // namespace banach_ortho
