#include "banach_ortho/space.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace banach_ortho {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_space(const PNormSpace& s) {
  if (s.n < 1) throw std::invalid_argument("space dimension must be >= 1");
  if (!(s.p >= 1.0)) throw std::invalid_argument("exponent p must be >= 1");
}

void check_dim(const PNormSpace& s, const Eigen::VectorXcd& x,
               const char* what) {
  if (x.size() != s.n)
    throw std::invalid_argument(std::string(what) +
                                ": dimension does not match the space");
  if (!x.allFinite())
    throw std::invalid_argument(std::string(what) + ": non-finite entries");
}

void check_smooth(const PNormSpace& s, const char* op) {
  if (!(s.p > 1.0) || std::isinf(s.p))
    throw std::invalid_argument(std::string(op) +
                                " requires 1 < p < inf (the functional is "
                                "not unique at the endpoints)");
}

// Golden-section minimization of a convex function on [lo, hi].
template <typename F>
double golden_min(F&& f, double lo, double hi, double width_tol) {
  const double invphi = 0.6180339887498949;
  double a = lo, b = hi;
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > width_tol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

double dual_exponent(double p) {
  if (p == 1.0) return kInf;
  if (std::isinf(p)) return 1.0;
  return p / (p - 1.0);
}

double p_norm(const PNormSpace& space, const Eigen::VectorXcd& x) {
  check_space(space);
  check_dim(space, x, "p_norm");
  const Eigen::VectorXd a = x.cwiseAbs();
  const double m = a.maxCoeff();
  if (m == 0.0 || std::isinf(space.p)) return m;
  // Scale by the largest modulus so x with huge or tiny entries stays in
  // range: ||x|| = m * || x/m ||.
  const double s = (a / m).array().pow(space.p).sum();
  return m * std::pow(s, 1.0 / space.p);
}

Eigen::VectorXcd support_functional(const PNormSpace& space,
                                    const Eigen::VectorXcd& x) {
  check_smooth(space, "support_functional");
  check_dim(space, x, "support_functional");
  const double nx = p_norm(space, x);
  if (nx == 0.0)
    throw std::invalid_argument("support_functional: x must be nonzero");
  Eigen::VectorXcd f(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    const double mag = std::abs(x[i]);
    f[i] = mag > 0.0 ? std::conj(csign(x[i])) * std::pow(mag / nx, space.p - 1.0)
                     : Scalar(0.0, 0.0);
  }
  return f;
}

Eigen::VectorXcd inverse_duality(const PNormSpace& space,
                                 const Eigen::VectorXcd& f) {
  check_smooth(space, "inverse_duality");
  check_dim(space, f, "inverse_duality");
  const double m = f.cwiseAbs().maxCoeff();
  if (m == 0.0)
    throw std::invalid_argument("inverse_duality: functional must be nonzero");
  const double q = dual_exponent(space.p);
  Eigen::VectorXcd z(f.size());
  for (Eigen::Index i = 0; i < f.size(); ++i) {
    const double mag = std::abs(f[i]) / m;
    z[i] = mag > 0.0 ? std::conj(csign(f[i])) * std::pow(mag, q - 1.0)
                     : Scalar(0.0, 0.0);
  }
  z /= p_norm(space, z);
  return z;
}

Eigen::VectorXcd norm_attainment_direction(const PNormSpace& space,
                                           const Eigen::VectorXcd& f) {
  return inverse_duality(space, f);
}

BjMinimum bj_minimize(const PNormSpace& space, const Eigen::VectorXcd& x,
                      const Eigen::VectorXcd& y) {
  check_space(space);
  check_dim(space, x, "bj_minimize");
  check_dim(space, y, "bj_minimize");
  const double nx = p_norm(space, x);
  const double ny = p_norm(space, y);
  if (ny == 0.0) throw std::invalid_argument("bj_minimize: y must be nonzero");
  if (nx == 0.0) return {Scalar(0.0, 0.0), 0.0};

  // Outside |lambda| <= 2||x||/||y|| the objective exceeds ||x||.
  const double R = 2.0 * nx / ny;
  const double width_tol = 1e-12 * (1.0 + nx);

  Scalar lambda(0.0, 0.0);
  double value = nx;
  if (space.field == ScalarField::Real) {
    const auto g = [&](double t) {
      return p_norm(space, x + Scalar(t, 0.0) * y);
    };
    const double t = golden_min(g, -R, R, width_tol);
    lambda = Scalar(t, 0.0);
    value = g(t);
  } else {
    // Alternating golden-section over the real and imaginary parts. Each
    // restricted minimizer stays inside [-3R, 3R]: the sweep never increases
    // the value, and any point with value <= ||x|| has |lambda| <= R.
    double a = 0.0, b = 0.0;
    double cur = nx;
    const auto g = [&](double ra, double rb) {
      return p_norm(space, x + Scalar(ra, rb) * y);
    };
    for (int sweep = 0; sweep < 100; ++sweep) {
      a = golden_min([&](double t) { return g(t, b); }, -3.0 * R, 3.0 * R,
                     width_tol);
      b = golden_min([&](double t) { return g(a, t); }, -3.0 * R, 3.0 * R,
                     width_tol);
      const double next = g(a, b);
      if (cur - next < 1e-15 * (1.0 + nx)) {
        cur = std::min(cur, next);
        break;
      }
      cur = next;
    }
    lambda = Scalar(a, b);
    value = cur;
  }
  if (value > nx) {
    lambda = Scalar(0.0, 0.0);
    value = nx;
  }
  return {lambda, value};
}

OrthResult is_bj_orthogonal(const PNormSpace& space, const Eigen::VectorXcd& x,
                            const Eigen::VectorXcd& y, double tol) {
  const double nx = p_norm(space, x);
  if (nx == 0.0)
    throw std::invalid_argument("is_bj_orthogonal: x must be nonzero");
  const BjMinimum m = bj_minimize(space, x, y);
  const double gap = std::max(0.0, (nx - m.value) / nx);
  return {gap <= tol, gap, m.lambda};
}

double bj_functional_gap(const PNormSpace& space, const Eigen::VectorXcd& x,
                         const Eigen::VectorXcd& y) {
  check_dim(space, y, "bj_functional_gap");
  const Eigen::VectorXcd f = support_functional(space, x);
  const double ny = p_norm(space, y);
  if (ny == 0.0) return 0.0;
  return std::abs(f.cwiseProduct(y).sum()) / ny;
}

OrthResult is_isosceles_orthogonal(const PNormSpace& space,
                                   const Eigen::VectorXcd& x,
                                   const Eigen::VectorXcd& y, double tol) {
  const double plus = p_norm(space, x + y);
  const double minus = p_norm(space, x - y);
  const double gap = std::abs(plus - minus) / std::max({plus, minus, 1.0});
  return {gap <= tol, gap, std::nullopt};
}

SpaceProperties space_properties(const PNormSpace& space) {
  check_space(space);
  const bool nice = space.n == 1 || (space.p > 1.0 && !std::isinf(space.p));
  return {nice, nice};
}

}  // namespace banach_ortho
