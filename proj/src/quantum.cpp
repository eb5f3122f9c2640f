#include "landauer/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "landauer/errors.hpp"

namespace landauer::quantum {

namespace {

constexpr double kStateTolerance = 1e-12;
constexpr double kEntropyFloor = 1e-15;
constexpr double kSupportFloor = 1e-13;
constexpr double kSupportWeight = 1e-10;
constexpr double kImaginaryResidue = 1e-10;

constexpr double kInf = std::numeric_limits<double>::infinity();

double real_trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.cols() || a.cols() != b.rows()) {
    throw DimensionMismatch("trace product: dimensions differ");
  }
  Complex sum = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) sum += a(i, k) * b(k, i);
  if (std::abs(sum.imag()) > kImaginaryResidue * std::max(1.0, std::abs(sum.real()))) {
    throw DomainError("trace product: imaginary residue " + std::to_string(sum.imag()));
  }
  return sum.real();
}

// Number of eigenvalues (ascending) degenerate with the lowest one.
std::size_t ground_degeneracy(std::span<const double> ascending) {
  double scale = 1.0;
  for (double x : ascending) scale = std::max(scale, std::abs(x));
  std::size_t g = 0;
  while (g < ascending.size() && ascending[g] - ascending[0] <= 1e-12 * scale) ++g;
  return g;
}

// <v_k| m |v_k> for every eigenvector column k.
std::vector<double> diagonal_in_basis(const ComplexMatrix& m, const ComplexMatrix& v) {
  const std::size_t n = v.rows();
  std::vector<double> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    Complex sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      Complex row = 0.0;
      for (std::size_t j = 0; j < n; ++j) row += m(i, j) * v(j, k);
      sum += std::conj(v(i, k)) * row;
    }
    out[k] = sum.real();
  }
  return out;
}

}  // namespace

DensityMatrix::DensityMatrix(const ComplexMatrix& m) {
  if (!m.is_square() || m.rows() == 0) {
    throw InvalidState("DensityMatrix: matrix must be square and non-empty");
  }
  const std::size_t n = m.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      if (std::abs(m(i, j) - std::conj(m(j, i))) > kStateTolerance) {
        throw InvalidState("DensityMatrix: not Hermitian at (" + std::to_string(i) + "," +
                           std::to_string(j) + ")");
      }
  linalg::HermitianMatrix h(m);
  m_ = h.matrix();

  const double trace = m_.trace().real();
  if (std::abs(trace - 1.0) > kStateTolerance) {
    throw InvalidState("DensityMatrix: trace " + std::to_string(trace) + " differs from 1");
  }
  eigenvalues_ = linalg::hermitian_eig(h).eigenvalues;
  if (eigenvalues_.front() < -kStateTolerance) {
    throw InvalidState("DensityMatrix: negative eigenvalue " +
                       std::to_string(eigenvalues_.front()));
  }
}

DensityMatrix DensityMatrix::diagonal(std::span<const double> populations) {
  return DensityMatrix(ComplexMatrix::diagonal(populations));
}

DensityMatrix DensityMatrix::pure(std::span<const Complex> amplitudes) {
  const std::size_t n = amplitudes.size();
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = amplitudes[i] * std::conj(amplitudes[j]);
  return DensityMatrix(m);
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
  return DensityMatrix(ComplexMatrix::identity(dim) * Complex(1.0 / static_cast<double>(dim)));
}

ThermalStateInfo thermal_state(const HermitianMatrix& h, double beta) {
  return thermal_state(linalg::hermitian_eig(h), beta);
}

ThermalStateInfo thermal_state(const EigenDecomposition& h_eig, double beta) {
  if (std::isnan(beta) || beta < 0.0) {
    throw InvalidBeta("thermal_state: beta must be >= 0, got " + std::to_string(beta));
  }
  const auto& lambda = h_eig.eigenvalues;
  const std::size_t n = lambda.size();
  const double ground = lambda.front();

  std::vector<double> weights(n, 0.0);
  double log_partition = 0.0;
  double entropy = 0.0;
  if (std::isinf(beta)) {
    const std::size_t g = ground_degeneracy(lambda);
    for (std::size_t k = 0; k < g; ++k) weights[k] = 1.0 / static_cast<double>(g);
    entropy = std::log(static_cast<double>(g));
    log_partition = entropy;
    if (ground != 0.0) log_partition += ground > 0.0 ? -kInf : kInf;
  } else {
    double z_shifted = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      weights[k] = std::exp(-beta * (lambda[k] - ground));
      z_shifted += weights[k];
    }
    double mean_excitation = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      weights[k] /= z_shifted;
      mean_excitation += weights[k] * (lambda[k] - ground);
    }
    log_partition = -beta * ground + std::log(z_shifted);
    entropy = beta * mean_excitation + std::log(z_shifted);
  }

  double energy = 0.0;
  for (std::size_t k = 0; k < n; ++k) energy += weights[k] * lambda[k];

  const ComplexMatrix& v = h_eig.eigenvectors;
  ComplexMatrix vw(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) vw(i, k) = v(i, k) * weights[k];

  return ThermalStateInfo{DensityMatrix(vw * v.adjoint()), beta, log_partition, energy, entropy};
}

double von_neumann_entropy(const DensityMatrix& rho) {
  double s = 0.0;
  for (double p : rho.eigenvalues())
    if (p > kEntropyFloor) s -= p * std::log(p);
  return s;
}

double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) {
    throw DimensionMismatch("relative_entropy: dimensions differ");
  }
  const auto sigma_eig = linalg::hermitian_eig(HermitianMatrix(sigma.matrix()));
  const auto weights = diagonal_in_basis(rho.matrix(), sigma_eig.eigenvectors);
  double cross = 0.0;  // tr(rho ln sigma)
  for (std::size_t k = 0; k < weights.size(); ++k) {
    const double s = sigma_eig.eigenvalues[k];
    if (s < kSupportFloor) {
      if (weights[k] > kSupportWeight) return kInf;
      continue;
    }
    cross += weights[k] * std::log(s);
  }
  return -von_neumann_entropy(rho) - cross;
}

double relative_entropy_to_thermal(const DensityMatrix& rho, const EigenDecomposition& h_eig,
                                   double beta) {
  if (rho.dim() != h_eig.eigenvalues.size()) {
    throw DimensionMismatch("relative_entropy_to_thermal: dimensions differ");
  }
  if (std::isnan(beta) || beta < 0.0) {
    throw InvalidBeta("relative_entropy_to_thermal: beta must be >= 0");
  }
  const auto weights = diagonal_in_basis(rho.matrix(), h_eig.eigenvectors);
  const auto& lambda = h_eig.eigenvalues;
  const double ground = lambda.front();
  if (std::isinf(beta)) {
    const std::size_t g = ground_degeneracy(lambda);
    double outside = 0.0;
    for (std::size_t k = g; k < weights.size(); ++k) outside += weights[k];
    if (outside > kSupportWeight) return kInf;
    return std::log(static_cast<double>(g)) - von_neumann_entropy(rho);
  }
  double z_shifted = 0.0;
  double mean_excitation = 0.0;
  for (std::size_t k = 0; k < lambda.size(); ++k) {
    z_shifted += std::exp(-beta * (lambda[k] - ground));
    mean_excitation += weights[k] * (lambda[k] - ground);
  }
  // -tr(rho ln sigma) = beta <H - E0>_rho + ln Z_shifted
  return beta * mean_excitation + std::log(z_shifted) - von_neumann_entropy(rho);
}

double mutual_information(const DensityMatrix& joint, std::size_t dim_system,
                          std::size_t dim_env) {
  const auto rho_s = partial_trace(joint, dim_system, dim_env, Keep::System);
  const auto rho_e = partial_trace(joint, dim_system, dim_env, Keep::Environment);
  return von_neumann_entropy(rho_s) + von_neumann_entropy(rho_e) - von_neumann_entropy(joint);
}

double internal_energy(const DensityMatrix& rho, const HermitianMatrix& h) {
  if (rho.dim() != h.dim()) {
    throw DimensionMismatch("internal_energy: dimensions differ");
  }
  return real_trace_product(h.matrix(), rho.matrix());
}

double nonequilibrium_free_energy(const DensityMatrix& rho, const HermitianMatrix& h, double T) {
  if (!(T >= 0.0) || std::isinf(T)) {
    throw DomainError("nonequilibrium_free_energy: T must be finite and >= 0");
  }
  const double energy = internal_energy(rho, h);
  if (T == 0.0) return energy;
  return energy - T * von_neumann_entropy(rho);
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::size_t dim_system, std::size_t dim_env,
                            Keep keep) {
  return DensityMatrix(linalg::partial_trace(rho.matrix(), dim_system, dim_env, keep));
}

DensityMatrix evolve(const DensityMatrix& rho, const UnitaryMatrix& u) {
  if (rho.dim() != u.dim()) {
    throw DimensionMismatch("evolve: dimensions differ");
  }
  return DensityMatrix(linalg::conjugate(u.matrix(), rho.matrix()));
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
  return DensityMatrix(linalg::kron(a.matrix(), b.matrix()));
}

}  // namespace landauer::quantum
