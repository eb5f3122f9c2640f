#include "landauer/harness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "landauer/envmodels.hpp"
#include "landauer/errors.hpp"
#include "landauer/format.hpp"

namespace landauer::harness {

using linalg::Complex;
using linalg::ComplexMatrix;

namespace {

constexpr std::uint64_t kProcessStream = 0x9E3779B97F4A7C15ULL;
constexpr double kLevelSpan = 3.0;
constexpr double kPartialSwapProbability = 0.6;

ComplexMatrix ginibre(std::size_t dim, Rng& rng) {
  ComplexMatrix g(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) g(i, j) = rng.complex_normal();
  return g;
}

ComplexMatrix partial_swap(std::size_t ds, std::size_t de, double theta) {
  const std::size_t n = ds * de;
  const std::size_t k = std::min(ds, de);
  // X is a Hermitian involution, so exp(-i theta X) = cos(theta) - i sin(theta) X.
  ComplexMatrix u = ComplexMatrix::identity(n) * Complex(std::cos(theta));
  const Complex s(0.0, -std::sin(theta));
  for (std::size_t i = 0; i < ds; ++i) {
    for (std::size_t j = 0; j < de; ++j) {
      const std::size_t from = i * de + j;
      const std::size_t to = (i < k && j < k) ? j * de + i : from;
      u(to, from) += s;
    }
  }
  return u;
}

class Recorder {
 public:
  Recorder(std::uint64_t seed, std::vector<Violation>& out) : seed_(seed), out_(out) {}
  void require(const char* name, double slack, double tolerance) {
    if (std::isnan(slack) || slack < -tolerance) fail(name, slack);
  }
  void fail(const char* name, double slack) { out_.push_back({seed_, name, slack}); }

 private:
  std::uint64_t seed_;
  std::vector<Violation>& out_;
};

}  // namespace

double Rng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
  if (spare_) {
    const double v = *spare_;
    spare_.reset();
    return v;
  }
  const double u1 = 1.0 - uniform();  // (0, 1]
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double phi = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(phi);
  return r * std::cos(phi);
}

Complex Rng::complex_normal() {
  const double re = normal();
  const double im = normal();
  return Complex(re, im) * std::numbers::sqrt2 * 0.5;
}

std::size_t Rng::index(std::size_t lo, std::size_t hi) {
  if (hi < lo) throw DomainError("Rng::index: empty range");
  const auto span = static_cast<double>(hi - lo + 1);
  const auto k = static_cast<std::size_t>(uniform() * span);
  return lo + std::min(k, hi - lo);
}

linalg::UnitaryMatrix random_unitary(std::size_t dim, Rng& rng) {
  if (dim == 0) throw DimensionMismatch("random_unitary: dim must be >= 1");
  ComplexMatrix q = ginibre(dim, rng);
  for (std::size_t k = 0; k < dim; ++k) {
    // Two Gram-Schmidt passes keep the columns orthonormal to ~1e-15.
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t j = 0; j < k; ++j) {
        Complex proj = 0.0;
        for (std::size_t i = 0; i < dim; ++i) proj += std::conj(q(i, j)) * q(i, k);
        for (std::size_t i = 0; i < dim; ++i) q(i, k) -= proj * q(i, j);
      }
    }
    double norm = 0.0;
    for (std::size_t i = 0; i < dim; ++i) norm += std::norm(q(i, k));
    norm = std::sqrt(norm);
    for (std::size_t i = 0; i < dim; ++i) q(i, k) /= norm;
  }
  return linalg::UnitaryMatrix(std::move(q));
}

quantum::DensityMatrix random_state(std::size_t dim, Rng& rng) {
  if (dim == 0) throw DimensionMismatch("random_state: dim must be >= 1");
  const ComplexMatrix g = ginibre(dim, rng);
  ComplexMatrix rho = g * g.adjoint();
  rho *= Complex(1.0 / rho.trace().real());
  return quantum::DensityMatrix(rho);
}

TrialSpec make_trial_spec(std::uint64_t seed, double temperature, std::size_t max_dim_system,
                          std::size_t max_dim_env) {
  if (max_dim_system < 2 || max_dim_env < 2) throw DomainError("trial dimensions must be >= 2");
  if (!(temperature >= 0.0) || std::isinf(temperature)) {
    throw DomainError("trial temperature must be finite and >= 0");
  }
  Rng rng(seed);
  TrialSpec spec;
  spec.seed = seed;
  spec.temperature = temperature;
  spec.dim_system = rng.index(2, max_dim_system);
  spec.dim_env = rng.index(2, max_dim_env);
  spec.env_levels.assign(spec.dim_env, 0.0);
  for (std::size_t k = 1; k < spec.dim_env; ++k) spec.env_levels[k] = kLevelSpan * rng.uniform();
  if (rng.uniform() < kPartialSwapProbability) {
    spec.coupling = Coupling::PartialSwap;
    spec.swap_angle = 0.25 * std::numbers::pi * (2.0 - rng.uniform());
  }
  return spec;
}

linalg::UnitaryMatrix trial_unitary(const TrialSpec& spec, Rng& rng) {
  switch (spec.coupling) {
    case Coupling::Haar:
      return random_unitary(spec.dim_system * spec.dim_env, rng);
    case Coupling::PartialSwap:
      return linalg::UnitaryMatrix(partial_swap(spec.dim_system, spec.dim_env, spec.swap_angle));
  }
  throw DomainError("unknown coupling");
}

TrialReport run_trial(const TrialSpec& spec) {
  if (spec.dim_system < 1 || spec.env_levels.size() != spec.dim_env || spec.dim_env < 1) {
    throw DimensionMismatch("run_trial: inconsistent dimensions");
  }
  const double T = spec.temperature;
  const double beta = T == 0.0 ? std::numeric_limits<double>::infinity() : 1.0 / T;

  Rng rng(spec.seed ^ kProcessStream);
  const auto rho_system = random_state(spec.dim_system, rng);
  const auto u = trial_unitary(spec, rng);

  const ThermalEnvironment env(linalg::HermitianMatrix::diagonal(spec.env_levels), beta);
  const auto final_state = quantum::evolve(quantum::tensor(rho_system, env.thermal.state), u);
  const env::FiniteSpectrum model(spec.env_levels);

  TrialReport report{spec, evaluate_process(rho_system, env, final_state), {}, 0.0, {}};
  ProcessRecord& r = report.record;

  const double final_energy = env.thermal.energy + r.delta_q_env;
  const auto levels = model.levels();
  report.matched_beta =
      model.beta_for_energy(std::clamp(final_energy, levels.front(), levels.back()));
  r.reference_temperature = report.matched_beta == 0.0 ? std::numeric_limits<double>::infinity()
                                                       : 1.0 / report.matched_beta;

  report.bound_eval = bounds::modified_bound(model, T, bounds::EntropyChangeTarget(r.delta_s_system));
  const auto& b = report.bound_eval;

  Recorder check(spec.seed, report.violations);
  check.require("mutual_information", r.mutual_info, 1e-10);
  check.require("entropy_balance", r.delta_s_system + r.delta_s_env, 1e-10);
  if (std::isfinite(r.entropy_production)) {
    check.require("second_law", r.entropy_production, 1e-9);
  }
  const double final_env_entropy = env.thermal.entropy + r.delta_s_env;
  check.require("maxent", model.entropy_at_beta(report.matched_beta) - final_env_entropy, 1e-10);
  if (b.status == bounds::BoundStatus::Infeasible) {
    // Slack is how far -dS_S overshoots the attainable entropy increase.
    check.fail("modified_bound", model.entropy_range(T).max_delta + r.delta_s_system);
  } else {
    check.require("modified_bound", r.delta_q_env - b.modified_bound, 1e-9);
    check.require("tightness", b.modified_bound - b.original_bound, 1e-12);
    if (T == 0.0 && r.delta_s_system < -1e-3 && !(b.modified_bound > 0.0)) {
      check.fail("zero_temperature_nontrivial", b.modified_bound);
    }
  }
  return report;
}

FuzzReport run_fuzz(const FuzzConfig& cfg) {
  if (cfg.trials == 0) throw DomainError("fuzz: trials must be >= 1");
  if (cfg.temperatures.empty()) throw DomainError("fuzz: temperature list is empty");
  FuzzReport out;
  out.trials.reserve(cfg.trials);
  double slack_sum = 0.0;
  std::size_t slack_count = 0;
  for (std::size_t i = 0; i < cfg.trials; ++i) {
    const double T = cfg.temperatures[i % cfg.temperatures.size()];
    auto spec = make_trial_spec(cfg.first_seed + i, T, cfg.max_dim_system, cfg.max_dim_env);
    out.trials.push_back(run_trial(spec));
    const auto& t = out.trials.back();
    out.violations.insert(out.violations.end(), t.violations.begin(), t.violations.end());
    if (t.matched_beta < 0.0) ++out.negative_temperature_trials;
    const auto& b = t.bound_eval;
    if (T == 0.0 && t.record.delta_s_system < -1e-3 && b.modified_bound > 0.0 &&
        b.original_bound == 0.0) {
      ++out.zero_temperature_erasures;
    }
    if (T == 1.0 && b.status != bounds::BoundStatus::Infeasible) {
      slack_sum += t.record.delta_q_env - b.modified_bound;
      ++slack_count;
    }
  }
  std::stable_sort(out.violations.begin(), out.violations.end(),
                   [](const Violation& a, const Violation& b) { return a.seed < b.seed; });
  for (const auto& v : out.violations) {
    const double mag = std::isnan(v.slack) ? std::numeric_limits<double>::infinity()
                                           : std::abs(v.slack);
    out.max_abs_slack_violation = std::max(out.max_abs_slack_violation, mag);
  }
  out.mean_slack_at_unit_temperature =
      slack_count > 0 ? slack_sum / static_cast<double>(slack_count)
                      : std::numeric_limits<double>::quiet_NaN();
  return out;
}

nlohmann::json to_json(const FuzzReport& report) {
  const auto number = json_number;
  nlohmann::json violations = nlohmann::json::array();
  for (const auto& v : report.violations) {
    violations.push_back({{"seed", v.seed}, {"inequality", v.inequality}, {"slack", number(v.slack)}});
  }
  return {
      {"trials", report.trials.size()},
      {"violations", std::move(violations)},
      {"max_abs_slack_violation", number(report.max_abs_slack_violation)},
      {"summary",
       {{"negative_temperature_trials", report.negative_temperature_trials},
        {"zero_temperature_erasures", report.zero_temperature_erasures},
        {"mean_slack_at_unit_temperature", number(report.mean_slack_at_unit_temperature)}}},
  };
}

}  // namespace landauer::harness
