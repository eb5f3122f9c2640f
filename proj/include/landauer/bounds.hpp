#pragma once

#include <string_view>

#include "landauer/envmodels.hpp"

namespace landauer::bounds {

using env::EnvironmentModel;

enum class BoundStatus {
  Exact,              // S(T') hits the target on the beta' > 0 branch
  ClampedAtZero,      // target at or below the T' -> 0 entropy; T' = 0
  ClampedAtBetaZero,  // target equals the beta' = 0 maximum; T' = +inf
  Infeasible,         // target above the attainable maximum
};

std::string_view to_string(BoundStatus status);

/// System entropy change Delta S_S (final minus initial), in nats.
class EntropyChangeTarget {
 public:
  /// Throws DomainError for non-finite values.
  explicit EntropyChangeTarget(double delta_s_system);
  [[nodiscard]] double value() const noexcept { return delta_s_; }

 private:
  double delta_s_;
};

struct ReferenceTemperature {
  double temperature;
  BoundStatus status;
};

struct BoundEvaluation {
  double reference_temperature;
  double modified_bound;  // NaN when status == Infeasible
  double original_bound;
  BoundStatus status;
};

/// Q(T') = E(T') - E(T) = integral of C over [T, T'].
double q_of_reference(const EnvironmentModel& m, double T, double t_prime);

/// S(T') = S_E(T') - S_E(T) = integral of C/tau over [T, T'].
double s_of_reference(const EnvironmentModel& m, double T, double t_prime);

/// Solves S(T') = target for T' on the positive-temperature branch.
///
/// Targets at or below the T' -> 0 limit clamp to T' = 0; targets above the
/// beta' = 0 maximum of a bounded spectrum are Infeasible. Tabulated models
/// throw OutOfTableRange when the root lies beyond the table.
ReferenceTemperature invert_entropy_change(const EnvironmentModel& m, double T, double target);

/// Solves Q(T') = delta_q for T' on the positive-temperature branch, with the
/// same clamping conventions as invert_entropy_change.
ReferenceTemperature invert_energy_change(const EnvironmentModel& m, double T, double delta_q);

/// Lower bound on the heat absorbed by an environment at temperature T when the
/// system entropy changes by ds: Q(S^{-1}(-ds)).
BoundEvaluation modified_bound(const EnvironmentModel& m, double T, EntropyChangeTarget ds);

/// -T ds
double original_landauer_bound(double T, EntropyChangeTarget ds);

/// -T ds + 3 c ds^2 / (pi L)
double closed_form_waveguide(double length, double speed, double T, EntropyChangeTarget ds);

/// Zero-temperature phonon bound 3^{4/3}/4 (-ds)^{4/3} / a^{1/3}.
/// Throws PositiveEntropyChange when ds > 0.
double closed_form_phonon_T0(double a, EntropyChangeTarget ds);

enum class GappedVariant { LambertExact, LogAsymptotic };

/// Zero-temperature gapped-bath bound delta (-ds) / W0(b / -ds), or with
/// ln in place of W0 for LogAsymptotic (requires b / -ds > e). Requires ds < 0.
double closed_form_gapped_T0(double b, double gap, EntropyChangeTarget ds, GappedVariant variant);

}  // namespace landauer::bounds
