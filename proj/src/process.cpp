#include "landauer/process.hpp"

#include <cmath>

namespace landauer {

ThermalEnvironment::ThermalEnvironment(linalg::HermitianMatrix h, double beta)
    : hamiltonian(std::move(h)),
      spectrum(linalg::hermitian_eig(hamiltonian)),
      thermal(quantum::thermal_state(spectrum, beta)) {}

ProcessRecord evaluate_process(const quantum::DensityMatrix& rho_system,
                               const ThermalEnvironment& env,
                               const quantum::DensityMatrix& rho_joint_final) {
  const std::size_t dim_s = rho_system.dim();
  const std::size_t dim_e = env.hamiltonian.dim();
  const auto rho_s_final =
      quantum::partial_trace(rho_joint_final, dim_s, dim_e, linalg::Keep::System);
  const auto rho_e_final =
      quantum::partial_trace(rho_joint_final, dim_s, dim_e, linalg::Keep::Environment);

  // Baselines go through the same partial-trace path as the final state so
  // that a trivial process gives exact zeros.
  const auto rho_joint_initial = quantum::tensor(rho_system, env.thermal.state);
  const auto rho_s_initial =
      quantum::partial_trace(rho_joint_initial, dim_s, dim_e, linalg::Keep::System);
  const auto rho_e_initial =
      quantum::partial_trace(rho_joint_initial, dim_s, dim_e, linalg::Keep::Environment);

  const double s_system_final = quantum::von_neumann_entropy(rho_s_final);
  const double s_env_final = quantum::von_neumann_entropy(rho_e_final);
  const double s_joint_final = quantum::von_neumann_entropy(rho_joint_final);

  ProcessRecord r;
  r.delta_s_system = s_system_final - quantum::von_neumann_entropy(rho_s_initial);
  r.delta_s_env = s_env_final - quantum::von_neumann_entropy(rho_e_initial);
  r.delta_q_env = quantum::internal_energy(rho_e_final, env.hamiltonian) -
                  quantum::internal_energy(rho_e_initial, env.hamiltonian);
  r.mutual_info = s_system_final + s_env_final - s_joint_final;
  r.entropy_production =
      r.mutual_info + quantum::relative_entropy_to_thermal(rho_e_final, env.spectrum,
                                                           env.thermal.beta);
  return r;
}

}  // namespace landauer
