#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "landauer/bounds.hpp"
#include "landauer/envmodels.hpp"
#include "landauer/process.hpp"
#include "landauer/quantum.hpp"

namespace landauer::rabi {

inline constexpr std::size_t kDefaultFockDim = 30;
inline constexpr std::size_t kMaxFockDim = 240;
inline constexpr double kTruncationTolerance = 1e-8;

/// Qubit (system) coupled to one truncated cavity mode (environment):
///   H = omega a^dagger a + (Omega/2) sigma_z + g (a + a^dagger) sigma_x.
/// The qubit basis is ordered (ground, excited), so sigma_z here is
/// diag(-1, +1) and the qubit starts in diag(1 - p, p).
struct RabiConfig {
  double omega = 1.0;
  double qubit_splitting = 1.0;
  double coupling = 0.2;
  double temperature = 0.01;
  double excitation = 0.1;
  std::size_t fock_dim = kDefaultFockDim;
  std::vector<double> t_grid;

  /// Throws DomainError when a field is out of range.
  void validate() const;
};

/// steps points spanning [0, t_max] inclusive.
std::vector<double> uniform_time_grid(double t_max, std::size_t steps);

/// omega = Omega = 1, p = 0.1, N = 30 and t in [0, 20] with 200 points.
RabiConfig benchmark_config(double coupling, double temperature);

struct RabiHamiltonian {
  linalg::HermitianMatrix total;        // on system ⊗ environment, dim 2N
  linalg::HermitianMatrix environment;  // omega a^dagger a, dim N
  linalg::HermitianMatrix system;       // (Omega/2) sigma_z, dim 2
};

RabiHamiltonian build_rabi_hamiltonian(const RabiConfig& cfg);

/// diag(1 - p, p) ⊗ thermal cavity state at cfg.temperature.
quantum::DensityMatrix initial_state(const RabiConfig& cfg);

struct RabiSample {
  ProcessRecord record;  // reference_temperature is the energy-matched T'
  bounds::BoundEvaluation bound;
};

/// Exact evolution at fixed truncation. The spectral decomposition of H is
/// computed once; at() is const and independent per time point.
class RabiSimulator {
 public:
  explicit RabiSimulator(const RabiConfig& cfg);

  [[nodiscard]] RabiSample at(double t) const;
  [[nodiscard]] const RabiConfig& config() const noexcept { return cfg_; }
  [[nodiscard]] const RabiHamiltonian& hamiltonian() const noexcept { return ham_; }
  [[nodiscard]] const quantum::DensityMatrix& initial() const noexcept { return rho0_; }

  /// Evolved joint state at time t.
  [[nodiscard]] quantum::DensityMatrix state_at(double t) const;

 private:
  RabiConfig cfg_;
  RabiHamiltonian ham_;
  ThermalEnvironment env_;
  quantum::DensityMatrix rho_system_;
  quantum::DensityMatrix rho0_;
  linalg::EigenDecomposition eig_;
  linalg::ComplexMatrix rho0_eigenbasis_;
  env::BosonicMode mode_;
};

/// Smallest N (starting at cfg.fock_dim, doubling) for which the record at
/// time t changes by less than 1e-8 in both Delta Q_E and Delta S_S when N is
/// doubled. Throws TruncationUnconverged once 2N would exceed 240.
std::size_t certify_truncation(const RabiConfig& cfg, double t);

/// One certified time point.
RabiSample simulate_step(const RabiConfig& cfg, double t);

/// One sample per entry of cfg.t_grid, truncation certified at the final time.
std::vector<RabiSample> sweep(const RabiConfig& cfg);

/// Header plus one row per sample:
/// t,dS_S,dQ_E,dS_E,mutual_info,sigma,T_prime,bound_modified,bound_original
void write_csv(std::ostream& out, std::span<const RabiSample> samples);

}  // namespace landauer::rabi
