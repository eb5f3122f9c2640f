#pragma once

#include <cmath>
#include <random>

#include "landauer/linalg.hpp"
#include "landauer/quantum.hpp"

namespace testing {

using landauer::linalg::Complex;
using landauer::linalg::ComplexMatrix;

inline ComplexMatrix random_matrix(std::size_t n, std::mt19937_64& gen) {
  std::normal_distribution<double> normal;
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Complex(normal(gen), normal(gen));
  return m;
}

inline landauer::linalg::HermitianMatrix random_hermitian(std::size_t n, std::mt19937_64& gen) {
  const ComplexMatrix g = random_matrix(n, gen);
  return landauer::linalg::HermitianMatrix((g + g.adjoint()) * Complex(0.5));
}

inline landauer::quantum::DensityMatrix random_density(std::size_t n, std::mt19937_64& gen) {
  const ComplexMatrix g = random_matrix(n, gen);
  ComplexMatrix rho = g * g.adjoint();
  rho *= Complex(1.0 / rho.trace().real());
  return landauer::quantum::DensityMatrix(rho);
}

inline double rel_diff(double a, double b) {
  return std::abs(a - b) / std::max(std::abs(b), 1e-300);
}

}  // namespace testing
