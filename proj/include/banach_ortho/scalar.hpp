#pragma once

#include <complex>
#include <random>
#include <string>

namespace banach_ortho {

// Scalar field tag. Real-field data is stored in complex containers with zero
// imaginary parts; the tag decides sampling, serialization and which angles
// theta are admissible.
enum class ScalarField { Real, Complex };

using Scalar = std::complex<double>;
using Rng = std::mt19937_64;

inline const char* to_string(ScalarField f) {
  return f == ScalarField::Real ? "real" : "complex";
}

// z/|z| for z != 0, else 0.
inline Scalar csign(const Scalar& z) {
  const double m = std::abs(z);
  return m > 0.0 ? z / m : Scalar(0.0, 0.0);
}

}  // namespace banach_ortho
