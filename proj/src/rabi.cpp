#include "landauer/rabi.hpp"

#include <cmath>
#include <limits>
#include <ostream>
#include <string>

#include "landauer/errors.hpp"
#include "landauer/format.hpp"

namespace landauer::rabi {

using linalg::Complex;
using linalg::ComplexMatrix;
using linalg::HermitianMatrix;

namespace {

double beta_of(double T) {
  if (T == 0.0) return std::numeric_limits<double>::infinity();
  return 1.0 / T;
}

RabiConfig with_fock_dim(RabiConfig cfg, std::size_t n) {
  cfg.fock_dim = n;
  return cfg;
}

}  // namespace

void RabiConfig::validate() const {
  auto positive = [](double x, const char* name) {
    if (!(x > 0.0) || !std::isfinite(x)) throw DomainError(std::string(name) + " must be > 0");
  };
  positive(omega, "omega");
  positive(qubit_splitting, "Omega");
  if (!(coupling >= 0.0) || !std::isfinite(coupling)) throw DomainError("g must be >= 0");
  if (!(temperature >= 0.0)) throw DomainError("T must be >= 0");
  if (!(excitation >= 0.0 && excitation <= 1.0)) throw DomainError("p must lie in [0, 1]");
  if (fock_dim < 2) throw DomainError("fock dimension must be >= 2");
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    if (!std::isfinite(t_grid[i])) throw DomainError("times must be finite");
    if (i > 0 && !(t_grid[i] > t_grid[i - 1])) throw DomainError("times must be ascending");
  }
}

std::vector<double> uniform_time_grid(double t_max, std::size_t steps) {
  if (!(t_max >= 0.0) || !std::isfinite(t_max)) throw DomainError("tmax must be finite and >= 0");
  std::vector<double> grid(steps);
  if (steps == 1) {
    grid[0] = 0.0;
    return grid;
  }
  for (std::size_t k = 0; k < steps; ++k) {
    grid[k] = t_max * static_cast<double>(k) / static_cast<double>(steps - 1);
  }
  return grid;
}

RabiConfig benchmark_config(double coupling, double temperature) {
  RabiConfig cfg;
  cfg.coupling = coupling;
  cfg.temperature = temperature;
  cfg.t_grid = uniform_time_grid(20.0, 200);
  return cfg;
}

RabiHamiltonian build_rabi_hamiltonian(const RabiConfig& cfg) {
  cfg.validate();
  const std::size_t n = cfg.fock_dim;

  std::vector<double> number(n);
  for (std::size_t k = 0; k < n; ++k) number[k] = cfg.omega * static_cast<double>(k);
  const ComplexMatrix h_env = ComplexMatrix::diagonal(std::span<const double>(number));

  const double half = 0.5 * cfg.qubit_splitting;
  const std::vector<double> qubit{-half, half};
  const ComplexMatrix h_sys = ComplexMatrix::diagonal(std::span<const double>(qubit));

  ComplexMatrix quadrature(n, n);  // a + a^dagger
  for (std::size_t k = 1; k < n; ++k) {
    quadrature(k - 1, k) = std::sqrt(static_cast<double>(k));
    quadrature(k, k - 1) = std::sqrt(static_cast<double>(k));
  }
  const ComplexMatrix sigma_x{{0.0, 1.0}, {1.0, 0.0}};

  ComplexMatrix total = linalg::kron(h_sys, ComplexMatrix::identity(n)) +
                        linalg::kron(ComplexMatrix::identity(2), h_env);
  if (cfg.coupling != 0.0) {
    total += linalg::kron(sigma_x, quadrature) * Complex(cfg.coupling);
  }
  return RabiHamiltonian{HermitianMatrix(total), HermitianMatrix(h_env), HermitianMatrix(h_sys)};
}

quantum::DensityMatrix initial_state(const RabiConfig& cfg) {
  cfg.validate();
  const auto ham = build_rabi_hamiltonian(cfg);
  const std::vector<double> qubit{1.0 - cfg.excitation, cfg.excitation};
  const auto thermal =
      quantum::thermal_state(ham.environment, beta_of(cfg.temperature));
  return quantum::tensor(quantum::DensityMatrix::diagonal(qubit), thermal.state);
}

RabiSimulator::RabiSimulator(const RabiConfig& cfg)
    : cfg_((cfg.validate(), cfg)),
      ham_(build_rabi_hamiltonian(cfg_)),
      env_(ham_.environment, [&] {
        if (std::isinf(cfg_.temperature)) throw DomainError("simulation requires finite T");
        return beta_of(cfg_.temperature);
      }()),
      rho_system_(quantum::DensityMatrix::diagonal(
          std::vector<double>{1.0 - cfg_.excitation, cfg_.excitation})),
      rho0_(quantum::tensor(rho_system_, env_.thermal.state)),
      eig_(linalg::hermitian_eig(ham_.total)),
      rho0_eigenbasis_(eig_.eigenvectors.adjoint() * rho0_.matrix() * eig_.eigenvectors),
      mode_(cfg_.omega) {}

quantum::DensityMatrix RabiSimulator::state_at(double t) const {
  if (!(t >= 0.0) || !std::isfinite(t)) throw DomainError("time must be finite and >= 0");
  if (t == 0.0) return rho0_;
  const std::size_t n = eig_.eigenvalues.size();
  const auto& lambda = eig_.eigenvalues;
  ComplexMatrix rotated(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      const double gap = lambda[j] - lambda[k];
      rotated(j, k) = gap == 0.0 ? rho0_eigenbasis_(j, k)
                                 : rho0_eigenbasis_(j, k) * std::polar(1.0, -gap * t);
    }
  }
  const ComplexMatrix& v = eig_.eigenvectors;
  return quantum::DensityMatrix(v * rotated * v.adjoint());
}

RabiSample RabiSimulator::at(double t) const {
  RabiSample sample;
  sample.record = evaluate_process(rho_system_, env_, state_at(t));
  sample.record.time = t;
  const auto matched =
      bounds::invert_energy_change(mode_, cfg_.temperature, sample.record.delta_q_env);
  sample.record.reference_temperature = matched.temperature;
  sample.bound = bounds::modified_bound(mode_, cfg_.temperature,
                                        bounds::EntropyChangeTarget(sample.record.delta_s_system));
  return sample;
}

std::size_t certify_truncation(const RabiConfig& cfg, double t) {
  cfg.validate();
  std::size_t n = cfg.fock_dim;
  while (2 * n <= kMaxFockDim) {
    const auto coarse = RabiSimulator(with_fock_dim(cfg, n)).at(t).record;
    const auto fine = RabiSimulator(with_fock_dim(cfg, 2 * n)).at(t).record;
    if (std::abs(coarse.delta_q_env - fine.delta_q_env) < kTruncationTolerance &&
        std::abs(coarse.delta_s_system - fine.delta_s_system) < kTruncationTolerance) {
      return n;
    }
    n *= 2;
  }
  throw TruncationUnconverged("Fock truncation not converged up to N = " +
                              std::to_string(kMaxFockDim) + " at t = " + std::to_string(t));
}

RabiSample simulate_step(const RabiConfig& cfg, double t) {
  const std::size_t n = certify_truncation(cfg, t);
  return RabiSimulator(with_fock_dim(cfg, n)).at(t);
}

std::vector<RabiSample> sweep(const RabiConfig& cfg) {
  cfg.validate();
  if (cfg.t_grid.empty()) return {};
  const std::size_t n = certify_truncation(cfg, cfg.t_grid.back());
  const RabiSimulator sim(with_fock_dim(cfg, n));
  std::vector<RabiSample> out;
  out.reserve(cfg.t_grid.size());
  for (double t : cfg.t_grid) out.push_back(sim.at(t));
  return out;
}

void write_csv(std::ostream& out, std::span<const RabiSample> samples) {
  out << "t,dS_S,dQ_E,dS_E,mutual_info,sigma,T_prime,bound_modified,bound_original\n";
  for (const auto& s : samples) {
    const auto& r = s.record;
    out << format_number(r.time) << ',' << format_number(r.delta_s_system) << ','
        << format_number(r.delta_q_env) << ',' << format_number(r.delta_s_env) << ','
        << format_number(r.mutual_info) << ',' << format_number(r.entropy_production) << ','
        << format_number(r.reference_temperature) << ',' << format_number(s.bound.modified_bound)
        << ',' << format_number(s.bound.original_bound) << '\n';
  }
}

}  // namespace landauer::rabi
