#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "landauer/bounds.hpp"
#include "landauer/process.hpp"
#include "landauer/quantum.hpp"

namespace landauer::harness {

/// Reproducible random source: std::mt19937_64 (bit-exact by the standard)
/// seeded with the trial seed. Uniforms take the top 53 bits of each draw;
/// normals use the Box-Muller transform. No std:: distributions are used, as
/// their output is implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform on [0, 1).
  double uniform();
  double normal();
  /// (x + i y) / sqrt(2) with x, y standard normal.
  linalg::Complex complex_normal();
  /// Uniform integer in [lo, hi].
  std::size_t index(std::size_t lo, std::size_t hi);

 private:
  std::mt19937_64 engine_;
  std::optional<double> spare_;
};

/// Haar-distributed unitary: Gram-Schmidt on a complex Ginibre matrix, which
/// leaves R with a positive real diagonal.
linalg::UnitaryMatrix random_unitary(std::size_t dim, Rng& rng);

/// G G^dagger / tr(G G^dagger) with G complex Ginibre.
quantum::DensityMatrix random_state(std::size_t dim, Rng& rng);

/// Global unitary family used for a trial.
enum class Coupling {
  Haar,         // Haar-random U on the joint space
  PartialSwap,  // exp(-i theta X), X swapping |i>_S|j>_E <-> |j>_S|i>_E for i, j < min(dS, dE)
};

struct TrialSpec {
  std::uint64_t seed = 0;
  std::size_t dim_system = 2;
  std::size_t dim_env = 2;
  double temperature = 0.0;
  std::vector<double> env_levels;  // env_levels[0] == 0, others uniform in [0, 3]
  Coupling coupling = Coupling::Haar;
  double swap_angle = 0.0;  // theta in (pi/4, pi/2], PartialSwap only
};

/// Draws dimensions, levels and coupling from Rng(seed).
TrialSpec make_trial_spec(std::uint64_t seed, double temperature, std::size_t max_dim_system = 3,
                          std::size_t max_dim_env = 6);

/// Global unitary of the trial, drawn from `rng`.
linalg::UnitaryMatrix trial_unitary(const TrialSpec& spec, Rng& rng);

struct Violation {
  std::uint64_t seed;
  std::string inequality;
  double slack;
};

struct TrialReport {
  TrialSpec spec;
  ProcessRecord record;  // reference_temperature from the unrestricted energy match (may be < 0)
  bounds::BoundEvaluation bound_eval;
  double matched_beta;  // beta' with E_E(beta') = tr(H_E rho_E'), any sign
  std::vector<Violation> violations;
};

/// Samples rho_S and U from Rng(seed ^ 0x9E3779B97F4A7C15), evolves
/// rho_S ⊗ rho_E^th(T) and checks the inequality chain:
///   mutual_information  I' >= -1e-10
///   entropy_balance     dS_S + dS_E >= -1e-10
///   second_law          Sigma >= -1e-9 (when finite)
///   maxent              S_E(beta') - S(rho_E') >= -1e-10
///   modified_bound      dQ_E - modified >= -1e-9 (Infeasible counts as a violation)
///   tightness           modified - original >= -1e-12
///   zero_temperature_nontrivial  modified > 0 when T = 0 and dS_S < -1e-3
TrialReport run_trial(const TrialSpec& spec);

struct FuzzConfig {
  std::size_t trials = 1000;
  std::uint64_t first_seed = 1;
  std::vector<double> temperatures{0.0, 0.1, 1.0, 10.0};
  std::size_t max_dim_system = 3;
  std::size_t max_dim_env = 6;
};

struct FuzzReport {
  std::vector<TrialReport> trials;  // ascending seed
  std::vector<Violation> violations;
  double max_abs_slack_violation = 0.0;
  std::size_t negative_temperature_trials = 0;
  std::size_t zero_temperature_erasures = 0;  // T = 0, dS_S < -1e-3, modified > 0, original == 0
  double mean_slack_at_unit_temperature = 0.0;
};

/// Trial i uses seed first_seed + i and temperature temperatures[i % size].
FuzzReport run_fuzz(const FuzzConfig& cfg);

/// {trials, violations: [{seed, inequality, slack}], max_abs_slack_violation, summary}
nlohmann::json to_json(const FuzzReport& report);

}  // namespace landauer::harness
