#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "landauer/linalg.hpp"

namespace landauer::quantum {

using linalg::Complex;
using linalg::ComplexMatrix;
using linalg::EigenDecomposition;
using linalg::HermitianMatrix;
using linalg::Keep;
using linalg::UnitaryMatrix;

/// Hermitian, unit-trace, positive-semidefinite operator. Construction checks
/// all three properties to 1e-12 and caches the spectrum.
class DensityMatrix {
 public:
  explicit DensityMatrix(const ComplexMatrix& m);

  static DensityMatrix diagonal(std::span<const double> populations);
  static DensityMatrix pure(std::span<const Complex> amplitudes);
  static DensityMatrix maximally_mixed(std::size_t dim);

  [[nodiscard]] std::size_t dim() const noexcept { return m_.rows(); }
  [[nodiscard]] const ComplexMatrix& matrix() const noexcept { return m_; }
  const Complex& operator()(std::size_t i, std::size_t j) const noexcept { return m_(i, j); }

  /// Ascending spectrum.
  [[nodiscard]] std::span<const double> eigenvalues() const noexcept { return eigenvalues_; }

 private:
  ComplexMatrix m_;
  std::vector<double> eigenvalues_;
};

/// Gibbs state exp(-beta h)/Z together with its thermodynamic data.
struct ThermalStateInfo {
  DensityMatrix state;
  double beta;
  double log_partition;  // ln Z; at beta = +inf this is ln(g0) - inf*E0 with 0*inf := 0
  double energy;
  double entropy;
};

/// beta == +infinity denotes T = 0 and yields the uniform mixture over the
/// ground eigenspace. Throws InvalidBeta for beta < 0 or NaN.
ThermalStateInfo thermal_state(const HermitianMatrix& h, double beta);
ThermalStateInfo thermal_state(const EigenDecomposition& h_eig, double beta);

/// -tr(rho ln rho); eigenvalues below 1e-15 contribute nothing.
double von_neumann_entropy(const DensityMatrix& rho);

/// S(rho || sigma); +infinity when supp(rho) is not inside supp(sigma).
double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma);

/// S(rho || exp(-beta h)/Z) evaluated with the analytic logarithm of the Gibbs
/// state, so it stays finite at low temperature wherever the support allows.
double relative_entropy_to_thermal(const DensityMatrix& rho, const EigenDecomposition& h_eig,
                                   double beta);

double mutual_information(const DensityMatrix& joint, std::size_t dim_system,
                          std::size_t dim_env);

double internal_energy(const DensityMatrix& rho, const HermitianMatrix& h);

/// tr(h rho) - T S(rho)
double nonequilibrium_free_energy(const DensityMatrix& rho, const HermitianMatrix& h, double T);

DensityMatrix partial_trace(const DensityMatrix& rho, std::size_t dim_system, std::size_t dim_env,
                            Keep keep);

/// U rho U^dagger
DensityMatrix evolve(const DensityMatrix& rho, const UnitaryMatrix& u);

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);

}  // namespace landauer::quantum
