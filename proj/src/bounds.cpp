#include "landauer/bounds.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "landauer/detail/roots.hpp"
#include "landauer/errors.hpp"
#include "landauer/specfun.hpp"

namespace landauer::bounds {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kBracketStart = 1e-6;
constexpr double kBracketCeiling = 1e300;
constexpr double kBoundaryTolerance = 1e-12;

void check_environment_temperature(double T) {
  if (!(T >= 0.0) || std::isinf(T)) {
    throw DomainError("environment temperature must be finite and >= 0");
  }
}

// Solves f(T') - f(T) = target on T' in (0, inf) for an increasing f.
template <class F>
ReferenceTemperature invert_increasing(const EnvironmentModel& m, double T, double target, F f) {
  check_environment_temperature(T);
  if (!std::isfinite(target)) throw DomainError("inversion target must be finite");
  if (target == 0.0) return {T, BoundStatus::Exact};

  const double base = f(T);
  const double lowest = f(0.0) - base;
  if (target <= lowest) return {0.0, BoundStatus::ClampedAtZero};
  if (m.bounded_spectrum()) {
    const double highest = f(kInf) - base;
    const double tol = kBoundaryTolerance * std::max(1.0, std::abs(highest));
    if (target > highest + tol) return {kInf, BoundStatus::Infeasible};
    if (target >= highest - tol) return {kInf, BoundStatus::ClampedAtBetaZero};
  }

  auto g = [&](double t_prime) { return f(t_prime) - base - target; };
  double lo = std::max(T, kBracketStart);
  double g_lo = g(lo);
  if (g_lo == 0.0) return {lo, BoundStatus::Exact};
  double hi = lo;
  double g_hi = g_lo;
  if (g_lo < 0.0) {
    do {
      lo = hi;
      g_lo = g_hi;
      hi *= 2.0;
      if (hi > kBracketCeiling) throw NoConvergence("inversion: no upper bracket found");
      g_hi = g(hi);
    } while (g_hi < 0.0);
  } else {
    do {
      hi = lo;
      g_hi = g_lo;
      lo *= 0.5;
      if (lo < std::numeric_limits<double>::min()) return {0.0, BoundStatus::ClampedAtZero};
      g_lo = g(lo);
    } while (g_lo > 0.0);
  }
  return {detail::brent_root(g, lo, hi, g_lo, g_hi), BoundStatus::Exact};
}

}  // namespace

std::string_view to_string(BoundStatus status) {
  switch (status) {
    case BoundStatus::Exact:
      return "Exact";
    case BoundStatus::ClampedAtZero:
      return "ClampedAtZero";
    case BoundStatus::ClampedAtBetaZero:
      return "ClampedAtBetaZero";
    case BoundStatus::Infeasible:
      return "Infeasible";
  }
  return "Unknown";
}

EntropyChangeTarget::EntropyChangeTarget(double delta_s_system) : delta_s_(delta_s_system) {
  if (!std::isfinite(delta_s_system)) {
    throw DomainError("entropy change must be finite");
  }
}

double q_of_reference(const EnvironmentModel& m, double T, double t_prime) {
  if (t_prime == T) return 0.0;
  return m.energy(t_prime) - m.energy(T);
}

double s_of_reference(const EnvironmentModel& m, double T, double t_prime) {
  if (t_prime == T) return 0.0;
  return m.entropy(t_prime) - m.entropy(T);
}

ReferenceTemperature invert_entropy_change(const EnvironmentModel& m, double T, double target) {
  return invert_increasing(m, T, target, [&](double x) { return m.entropy(x); });
}

ReferenceTemperature invert_energy_change(const EnvironmentModel& m, double T, double delta_q) {
  return invert_increasing(m, T, delta_q, [&](double x) { return m.energy(x); });
}

double original_landauer_bound(double T, EntropyChangeTarget ds) {
  check_environment_temperature(T);
  if (T == 0.0 || ds.value() == 0.0) return 0.0;
  return -T * ds.value();
}

BoundEvaluation modified_bound(const EnvironmentModel& m, double T, EntropyChangeTarget ds) {
  const double original = original_landauer_bound(T, ds);
  const auto ref = invert_entropy_change(m, T, -ds.value());
  double bound = std::numeric_limits<double>::quiet_NaN();
  switch (ref.status) {
    case BoundStatus::Exact:
    case BoundStatus::ClampedAtZero:
    case BoundStatus::ClampedAtBetaZero:
      bound = q_of_reference(m, T, ref.temperature);
      break;
    case BoundStatus::Infeasible:
      break;
  }
  return BoundEvaluation{ref.temperature, bound, original, ref.status};
}

double closed_form_waveguide(double length, double speed, double T, EntropyChangeTarget ds) {
  if (!(length > 0.0) || !(speed > 0.0)) throw DomainError("waveguide: L and c must be > 0");
  const double s = ds.value();
  return -T * s + 3.0 * speed / (std::numbers::pi * length) * s * s;
}

double closed_form_phonon_T0(double a, EntropyChangeTarget ds) {
  if (!(a > 0.0)) throw DomainError("phonon: a must be > 0");
  if (ds.value() > 0.0) {
    throw PositiveEntropyChange("phonon closed form holds for erasure (ds <= 0) at T = 0");
  }
  return std::pow(3.0, 4.0 / 3.0) / 4.0 * std::pow(-ds.value(), 4.0 / 3.0) / std::cbrt(a);
}

double closed_form_gapped_T0(double b, double gap, EntropyChangeTarget ds, GappedVariant variant) {
  if (!(b > 0.0) || !(gap > 0.0)) throw DomainError("gapped: b and delta must be > 0");
  const double erased = -ds.value();
  if (!(erased > 0.0)) throw DomainError("gapped closed form requires ds < 0");
  const double ratio = b / erased;
  if (variant == GappedVariant::LambertExact) {
    return gap * erased / specfun::lambert_w0(ratio);
  }
  if (!(ratio > std::numbers::e)) {
    throw DomainError("gapped logarithmic form requires b / (-ds) > e, got " +
                      std::to_string(ratio));
  }
  return gap * erased / std::log(ratio);
}

}  // namespace landauer::bounds
