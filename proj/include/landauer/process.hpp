#pragma once

#include <cstddef>

#include "landauer/quantum.hpp"

namespace landauer {

/// Thermodynamic bookkeeping for one realization of
///   rho_SE' = U (rho_S ⊗ rho_E^th(T)) U^dagger.
struct ProcessRecord {
  double time = 0.0;
  double delta_s_system = 0.0;  // S(rho_S') - S(rho_S)
  double delta_q_env = 0.0;     // tr H_E (rho_E' - rho_E)
  double delta_s_env = 0.0;     // S(rho_E') - S(rho_E)
  double mutual_info = 0.0;     // I'(S:E)
  double entropy_production = 0.0;  // I' + S(rho_E' || rho_E); +inf on support failure
  double reference_temperature = 0.0;
};

/// Environment Hamiltonian together with its thermal reference state.
struct ThermalEnvironment {
  linalg::HermitianMatrix hamiltonian;
  linalg::EigenDecomposition spectrum;
  quantum::ThermalStateInfo thermal;

  ThermalEnvironment(linalg::HermitianMatrix h, double beta);
};

/// Fills every ProcessRecord field except time and reference_temperature.
/// The joint state is ordered system ⊗ environment.
ProcessRecord evaluate_process(const quantum::DensityMatrix& rho_system,
                               const ThermalEnvironment& env,
                               const quantum::DensityMatrix& rho_joint_final);

}  // namespace landauer
