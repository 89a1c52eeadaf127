// Acceptance gate: one line per criterion, exit code = number of failures.
// Thresholds, counts and seeds are pinned here on purpose; do not relax them.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "banach_ortho/fixtures.hpp"
#include "banach_ortho/pairing.hpp"
#include "banach_ortho/preserve.hpp"
#include "banach_ortho/sampling.hpp"
#include "banach_ortho/space.hpp"
#include "banach_ortho/suites.hpp"

using namespace banach_ortho;

namespace {

struct Gate {
  int failures = 0;

  // Runs one criterion, prints its line, and counts the failure.
  template <typename Fn>
  void criterion(int id, long budget_ms, Fn&& fn) {
    const auto start = std::chrono::steady_clock::now();
    bool pass = false;
    std::string detail;
    try {
      detail = fn(pass);
    } catch (const std::exception& e) {
      pass = false;
      detail = std::string("exception: ") + e.what();
    }
    const long ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    if (budget_ms > 0 && ms >= budget_ms) {
      pass = false;
      detail += " (over " + std::to_string(budget_ms) + " ms budget)";
    }
    if (!pass) ++failures;
    std::cout << "criterion " << id << ": " << (pass ? "PASS" : "FAIL")
              << " (" << detail << ") [" << ms << " ms]\n";
  }
};

std::string suite_detail(const SuiteReport& r) {
  int trial_total = 0;
  for (const auto& p : r.properties) trial_total += p.trials;
  std::ostringstream s;
  s << r.properties.size() << " properties, " << trial_total << " trials, "
    << r.total_failures << " failures";
  return s.str();
}

const PropertyResult* find_property(const SuiteReport& r,
                                    const std::string& id) {
  for (const auto& p : r.properties)
    if (p.id == id) return &p;
  return nullptr;
}

// Unit-norm x with a unit-norm y from the kernel of its support functional;
// the perturbed variant shifts y along x so both decision paths must say no.
struct StructuredPair {
  Eigen::VectorXcd x;
  Eigen::VectorXcd y;
};

StructuredPair structured_pair(Rng& rng, const PNormSpace& space,
                               bool orthogonal) {
  Eigen::VectorXcd x;
  do {
    x = sample_gaussian_vector(rng, space.n, space.field);
  } while (x.norm() <= 1e-8);
  x /= p_norm(space, x);
  const std::vector<Eigen::VectorXcd> basis =
      functional_kernel_basis(support_functional(space, x));
  Eigen::VectorXcd y = Eigen::VectorXcd::Zero(space.n);
  while (y.norm() <= 1e-8) {
    const Eigen::VectorXcd c = sample_gaussian_vector(
        rng, static_cast<int>(basis.size()), space.field);
    y.setZero();
    for (std::size_t i = 0; i < basis.size(); ++i)
      y += c(static_cast<Eigen::Index>(i)) * basis[i];
  }
  y /= p_norm(space, y);
  if (!orthogonal) {
    std::uniform_real_distribution<double> mag(0.05, 1.0);
    double s = mag(rng);
    if (std::bernoulli_distribution(0.5)(rng)) s = -s;
    y += s * x;
  }
  return {std::move(x), std::move(y)};
}

}  // namespace

int main() {
  Gate gate;

  gate.criterion(1, 1000, [](bool& pass) {
    double max_err = 0.0;
    int passed = 0;
    const auto results = run_all_fixtures();
    for (const auto& r : results) {
      if (r.pass) ++passed;
      for (const auto& c : r.claims) max_err = std::max(max_err, c.error);
    }
    pass = passed == 4 && results.size() == 4 && max_err <= 1e-12;
    std::ostringstream s;
    s << passed << "/4 fixtures, max claim error " << max_err;
    return s.str();
  });

  gate.criterion(2, 10000, [](bool& pass) {
    const SuiteReport r = run_suite("basic", 42, 1000);
    pass = r.total_failures == 0;
    return suite_detail(r);
  });

  gate.criterion(3, 30000, [](bool& pass) {
    const SuiteReport r = run_suite("symmetry", 42, 500);
    pass = r.total_failures == 0;
    return suite_detail(r);
  });

  gate.criterion(4, 0, [](bool& pass) {
    const SuiteReport r = run_suite("direction", 42, 500);
    const PropertyResult* fwd = find_property(r, "theta-implies-left");
    const PropertyResult* conv = find_property(r, "fixture-converse");
    pass = r.total_failures == 0 && fwd && fwd->trials == 500 &&
           conv && conv->trials >= 1;
    std::ostringstream s;
    s << suite_detail(r) << "; implication on "
      << (fwd ? fwd->trials : 0) << " instances, converse witnessed";
    return s.str();
  });

  gate.criterion(5, 0, [](bool& pass) {
    const SuiteReport r = run_suite("preserver", 42, 500);
    const PropertyResult* pos = find_property(r, "isometry-positive");
    const PropertyResult* neg = find_property(r, "random-negative");
    pass = r.total_failures == 0 && pos && pos->trials == 100 &&
           pos->failures == 0 && neg && neg->trials == 100 &&
           neg->failures == 0;
    std::ostringstream s;
    s << "100 constructed isometries and 100 non-preservers, "
      << (pos ? pos->failures : -1) + (neg ? neg->failures : -1)
      << " misclassifications; " << suite_detail(r);
    return s.str();
  });

  gate.criterion(6, 60000, [](bool& pass) {
    std::ostringstream s;
    pass = true;
    auto fit_leq = [&](int n, double p, ScalarField field, double bound,
                       const char* label) {
      const double res = hilbert_fit(PNormSpace{n, p, field}, 200, 42).residual;
      const bool ok = res <= bound;
      pass = pass && ok;
      s << label << " " << res << (ok ? " ok" : " FAIL") << ", ";
    };
    auto fit_geq = [&](int n, double p, ScalarField field, double floor,
                       const char* label) {
      const double res = hilbert_fit(PNormSpace{n, p, field}, 200, 42).residual;
      const bool ok = res >= floor;
      pass = pass && ok;
      s << label << " " << res << (ok ? " ok" : " FAIL") << ", ";
    };
    fit_leq(2, 2.0, ScalarField::Real, 1e-8, "fit r2n2");
    fit_leq(3, 2.0, ScalarField::Real, 1e-8, "fit r2n3");
    fit_geq(2, 1.5, ScalarField::Real, 0.01, "floor r1.5");
    fit_geq(2, 3.0, ScalarField::Real, 0.01, "floor r3");
    fit_geq(2, 2.0, ScalarField::Complex, 0.01, "floor c2");

    const RotationReport p2 = rotation_bj_deviation(2.0, 200, 42);
    const bool p2_ok = p2.max_gap <= 1e-10;
    pass = pass && p2_ok;
    s << "rot p2 " << p2.max_gap << (p2_ok ? " ok" : " FAIL");
    for (const double p : {1.5, 3.0}) {
      const RotationReport r = rotation_bj_deviation(p, 200, 42);
      const bool ok = r.max_gap > 1e-3 && r.witness.has_value();
      pass = pass && ok;
      s << ", rot p" << p << " " << r.max_gap << (ok ? " ok" : " FAIL");
    }
    return s.str();
  });

  gate.criterion(7, 0, [](bool& pass) {
    const double ps[3] = {1.2, 2.0, 4.0};
    const int ns[2] = {2, 5};
    Rng rng(42);
    int disagreements = 0;
    const int total = 2000;
    for (int t = 0; t < total; ++t) {
      const ScalarField field =
          t % 2 == 0 ? ScalarField::Real : ScalarField::Complex;
      const PNormSpace space{ns[(t / 3) % 2], ps[t % 3], field};
      const StructuredPair sp =
          structured_pair(rng, space, (t / 6) % 2 == 0);
      const bool via_min = is_bj_orthogonal(space, sp.x, sp.y).verdict;
      const bool via_functional =
          bj_functional_gap(space, sp.x, sp.y) <= 1e-8;
      if (via_min != via_functional) ++disagreements;
    }
    pass = disagreements == 0;
    std::ostringstream s;
    s << total << " structured pairs, " << disagreements << " disagreements";
    return s.str();
  });

  std::cout << (gate.failures == 0 ? "all criteria passed"
                                   : std::to_string(gate.failures) +
                                         " criteria failed")
            << "\n";
  return gate.failures;
}
