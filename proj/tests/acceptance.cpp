// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on failure.

#include <algorithm>
#include <chrono>
#include <cfloat>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "landauer/bounds.hpp"
#include "landauer/envmodels.hpp"
#include "landauer/harness.hpp"
#include "landauer/rabi.hpp"
#include "landauer/specfun.hpp"

using namespace landauer;
using bounds::EntropyChangeTarget;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

struct Criterion {
  const char* id;
  const char* title;
  double time_limit_s;  // 0 = no limit
  std::function<Outcome()> run;
};

double rel_err(double a, double b) { return std::abs(a - b) / std::abs(b); }

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

Outcome waveguide_closed_form() {
  double worst = 0.0;
  for (auto [L, c] : {std::pair{std::numbers::pi, 1.0}, std::pair{2.5, 0.8}}) {
    const env::Waveguide1D m(L, c);
    for (double T : {0.0, 0.5, 2.0}) {
      for (double s : {-2.0, -0.5, -0.01}) {
        const double engine = bounds::modified_bound(m, T, EntropyChangeTarget(s)).modified_bound;
        worst = std::max(worst, rel_err(engine, bounds::closed_form_waveguide(L, c, T, EntropyChangeTarget(s))));
      }
    }
  }
  return {worst <= 1e-8, fmt("max relative error %.3g", worst)};
}

Outcome phonon_closed_form() {
  double worst = 0.0;
  for (double a : {0.1, 1.0, 10.0}) {
    for (double s : {-3.0, -1.0, -0.1}) {
      const double engine =
          bounds::modified_bound(env::DebyePhonon(a), 0.0, EntropyChangeTarget(s)).modified_bound;
      worst = std::max(worst, rel_err(engine, bounds::closed_form_phonon_T0(a, EntropyChangeTarget(s))));
    }
  }
  const double unit =
      bounds::modified_bound(env::DebyePhonon(1.0), 0.0, EntropyChangeTarget(-1.0)).modified_bound;
  const double scalar = std::pow(3.0, 4.0 / 3.0) / 4.0;
  const double unit_err = rel_err(unit, scalar);
  return {worst <= 1e-8 && unit_err <= 1e-8,
          fmt("max relative error %.3g; a=1, dS=-1 -> %.9f (3^(4/3)/4 = %.9f)",
              std::max(worst, unit_err), unit, scalar)};
}

Outcome gapped_chain() {
  using bounds::GappedVariant;
  const double unit = bounds::closed_form_gapped_T0(std::numbers::e, 1.0, EntropyChangeTarget(-1.0),
                                                    GappedVariant::LambertExact);
  bool ok = std::abs(unit - 1.0) <= 1e-10;
  std::string detail = fmt("b=e: %.15f; gaps", unit);
  double prev_gap = INFINITY;
  for (double ratio : {10.0, 1e3, 1e6}) {
    const double lam =
        bounds::closed_form_gapped_T0(ratio, 1.0, EntropyChangeTarget(-1.0), GappedVariant::LambertExact);
    const double log =
        bounds::closed_form_gapped_T0(ratio, 1.0, EntropyChangeTarget(-1.0), GappedVariant::LogAsymptotic);
    const double gap = (lam - log) / log;
    ok = ok && lam >= log && gap < prev_gap;
    prev_gap = gap;
    detail += fmt(" %.4g", gap);
  }
  return {ok, detail};
}

Outcome rabi_inequalities() {
  double worst_heat = INFINITY, worst_tight = INFINITY;
  std::size_t points = 0, max_n = 0;
  for (double g : {0.2, 0.05}) {
    for (double T : {0.01, 0.1, 0.4}) {
      const auto cfg = rabi::benchmark_config(g, T);
      max_n = std::max(max_n, rabi::certify_truncation(cfg, cfg.t_grid.back()));
      for (const auto& s : rabi::sweep(cfg)) {
        worst_heat = std::min(worst_heat, s.record.delta_q_env - s.bound.modified_bound);
        worst_tight = std::min(worst_tight, s.bound.modified_bound - s.bound.original_bound);
        ++points;
      }
    }
  }
  return {points == 1200 && worst_heat >= -1e-9 && worst_tight >= -1e-9,
          fmt("%zu points, N=%zu, min(dQ-mod)=%.3g, min(mod-orig)=%.3g", points, max_n, worst_heat,
              worst_tight)};
}

Outcome temperature_insensitivity() {
  const auto cold = rabi::sweep(rabi::benchmark_config(0.2, 0.01));
  const auto warm = rabi::sweep(rabi::benchmark_config(0.2, 0.1));
  double diff = 0.0, scale = 0.0;
  bool ratio_ok = true;
  std::size_t ratio_checked = 0, ratio_missed = 0;
  double worst_ulps = 0.0;
  for (std::size_t k = 0; k < cold.size(); ++k) {
    diff = std::max(diff, std::abs(cold[k].record.delta_q_env - warm[k].record.delta_q_env));
    scale = std::max(scale, std::abs(warm[k].record.delta_q_env));
    // Original bounds at equal dS_S: -0.1 dS / (-0.01 dS).
    const double s = cold[k].record.delta_s_system;
    if (s == 0.0) continue;
    const double ratio = bounds::original_landauer_bound(0.1, EntropyChangeTarget(s)) /
                         bounds::original_landauer_bound(0.01, EntropyChangeTarget(s));
    if (ratio != 10.0) ++ratio_missed;
    ratio_ok = ratio_ok && ratio == 10.0;
    worst_ulps = std::max(worst_ulps, std::abs(ratio - 10.0) / (10.0 * DBL_EPSILON));
    ++ratio_checked;
  }
  return {diff <= 0.1 * scale && ratio_ok && ratio_checked > 0,
          fmt("max|dQ diff|=%.4g vs 0.1*max|dQ|=%.4g; ratio!=10 at %zu of %zu points "
              "(worst %.2g ulp)",
              diff, 0.1 * scale, ratio_missed, ratio_checked, worst_ulps)};
}

Outcome high_temperature_coincidence() {
  const env::BosonicMode m(1.0);
  double prev = INFINITY, last = 0.0;
  bool decreasing = true;
  std::string values;
  for (double T : {1.0, 2.0, 5.0, 10.0, 20.0}) {
    const auto e = bounds::modified_bound(m, T, EntropyChangeTarget(-0.1));
    const double gap = (e.modified_bound - e.original_bound) / e.original_bound;
    decreasing = decreasing && gap < prev;
    prev = last = gap;
    values += fmt(" T=%g:%.5g", T, gap);
  }
  return {decreasing && last < 0.05, "relative gaps" + values};
}

Outcome fuzz_suite() {
  const auto report = harness::run_fuzz(harness::FuzzConfig{});
  const bool ok = report.trials.size() == 1000 && report.violations.empty() &&
                  report.zero_temperature_erasures >= 100;
  return {ok, fmt("%zu trials, %zu violations, %zu nontrivial T=0 erasures, %zu negative-T' trials",
                  report.trials.size(), report.violations.size(), report.zero_temperature_erasures,
                  report.negative_temperature_trials)};
}

double gibbs_entropy(const std::vector<double>& levels, double beta) {
  double z = 0.0, e = 0.0;
  for (double l : levels) {
    const double w = std::exp(-beta * (l - levels[0]));
    z += w;
    e += w * (l - levels[0]);
  }
  return beta * e / z + std::log(z);
}

// Dense log grid in beta' over [1e-6, 1e3], linear interpolation inside the
// bracketing cell.
double grid_scan_temperature(const std::vector<double>& levels, double target) {
  const int n = 1000000;
  const double lo = std::log(1e-6), hi = std::log(1e3);
  double prev_beta = 1e-6, prev_s = gibbs_entropy(levels, prev_beta);
  for (int k = 1; k < n; ++k) {
    const double beta = std::exp(lo + (hi - lo) * k / (n - 1));
    const double s = gibbs_entropy(levels, beta);
    if (s <= target) {
      const double w = (prev_s - target) / (prev_s - s);
      return 1.0 / (prev_beta + w * (beta - prev_beta));
    }
    prev_beta = beta;
    prev_s = s;
  }
  return NAN;
}

Outcome oracle_equivalence() {
  std::mt19937_64 gen(2024);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double worst = 0.0;
  int cases = 0;
  for (int k = 0; k < 50; ++k) {
    const int n = 2 + k % 3;
    std::vector<double> levels{0.0};
    for (int i = 1; i < n; ++i) levels.push_back(0.1 + 2.9 * unit(gen));
    std::sort(levels.begin(), levels.end());
    const env::FiniteSpectrum m(levels);
    const double T = std::array{0.0, 0.1, 0.5, 1.0}[k % 4];
    const double s0 = T == 0.0 ? 0.0 : gibbs_entropy(levels, 1.0 / T);
    // Reachable targets with T' between 0.05 and 5.
    const double beta_target = std::exp(std::log(0.2) + unit(gen) * std::log(100.0));
    const double target = gibbs_entropy(levels, beta_target) - s0;
    const auto ref = bounds::invert_entropy_change(m, T, target);
    if (ref.status != bounds::BoundStatus::Exact) return {false, fmt("case %d status not Exact", k)};
    worst = std::max(worst, std::abs(ref.temperature - grid_scan_temperature(levels, target + s0)));
    ++cases;
  }
  return {cases == 50 && worst <= 1e-6, fmt("%d cases, max |dT'| = %.3g", cases, worst)};
}

Outcome numerical_consistency() {
  const std::vector<env::ModelPtr> models{
      std::make_shared<env::BosonicMode>(1.0),
      std::make_shared<env::Waveguide1D>(2.0, 1.0),
      std::make_shared<env::DebyePhonon>(1.5),
      std::make_shared<env::GappedBCS>(2.0, 1.0),
      std::make_shared<env::FiniteSpectrum>(std::vector<double>{0.0, 0.7, 1.5}),
  };
  double worst_fd = 0.0;
  for (const auto& m : models) {
    for (double T : {0.2, 1.0, 5.0}) {
      const double h = 1e-5 * T;
      const double c = m->heat_capacity(T);
      worst_fd = std::max(worst_fd, rel_err((m->energy(T + h) - m->energy(T - h)) / (2 * h), c));
      worst_fd = std::max(worst_fd, rel_err((m->entropy(T + h) - m->entropy(T - h)) / (2 * h), c / T));
    }
  }
  double worst_rt = 0.0;
  for (double lx = -6.0; lx <= 6.0; lx += 0.01) {
    const double x = std::pow(10.0, lx);
    const double w = specfun::lambert_w0(x);
    worst_rt = std::max(worst_rt, std::abs(w * std::exp(w) - x) / std::max(1.0, x));
  }
  for (double w = -0.99; w <= 10.0; w += 0.01) {
    worst_rt = std::max(worst_rt, std::abs(specfun::lambert_w0(w * std::exp(w)) - w) / std::max(1.0, std::abs(w)));
  }
  return {worst_fd <= 1e-5 && worst_rt <= 1e-12,
          fmt("max FD relative error %.3g, max W0 round-trip error %.3g", worst_fd, worst_rt)};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"AC1", "closed form, waveguide", 1.0, waveguide_closed_form},
      {"AC2", "closed form, phonon", 1.0, phonon_closed_form},
      {"AC3", "gapped-bath chain", 1.0, gapped_chain},
      {"AC4", "qubit-cavity bound inequalities", 60.0, rabi_inequalities},
      {"AC5", "heat insensitive to low temperature", 0.0, temperature_insensitivity},
      {"AC6", "high-temperature coincidence", 0.0, high_temperature_coincidence},
      {"AC7", "randomized inequality chain", 120.0, fuzz_suite},
      {"AC8", "inversion vs grid-scan oracle", 30.0, oracle_equivalence},
      {"AC9", "numerical consistency", 0.0, numerical_consistency},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = c.time_limit_s == 0.0 || secs < c.time_limit_s;
    const bool pass = o.pass && in_time;
    failures += pass ? 0 : 1;
    std::printf("%s %s %s: %s (%.2f s%s)\n", pass ? "PASS" : "FAIL", c.id, c.title, o.detail.c_str(),
                secs, in_time ? "" : ", over time limit");
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
