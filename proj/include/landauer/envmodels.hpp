#pragma once

#include <filesystem>
#include <limits>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

namespace landauer::env {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Attainable window of S_E(T') - S_E(T) over T' in [0, +inf].
struct EntropyRange {
  double min_delta;  // at T' -> 0+
  double max_delta;  // at beta' -> 0+, +inf for unbounded spectra
};

/// Equilibrium thermodynamics of a thermal environment in natural units
/// (hbar = k_B = 1). Temperatures are >= 0; T = +inf (beta = 0) is only
/// admissible for environments with a bounded spectrum.
///
/// Energies are measured from the model's ground level, which is 0 for every
/// analytic model.
class EnvironmentModel {
 public:
  virtual ~EnvironmentModel() = default;

  [[nodiscard]] virtual std::string kind() const = 0;
  [[nodiscard]] virtual std::string describe() const = 0;

  [[nodiscard]] virtual double energy(double T) const = 0;
  [[nodiscard]] virtual double entropy(double T) const = 0;
  [[nodiscard]] virtual double heat_capacity(double T) const = 0;

  /// True when the spectrum is bounded and beta <= 0 is reachable.
  [[nodiscard]] virtual bool bounded_spectrum() const { return false; }
  /// Entropy at beta = 0; +inf for unbounded spectra.
  [[nodiscard]] virtual double max_entropy() const { return kInfinity; }

  [[nodiscard]] EntropyRange entropy_range(double T) const;

 protected:
  /// Throws DomainError for NaN, negative, or (unbounded spectra) infinite T.
  void check_temperature(double T) const;
};

using ModelPtr = std::shared_ptr<const EnvironmentModel>;

/// Single harmonic mode of frequency omega.
class BosonicMode final : public EnvironmentModel {
 public:
  explicit BosonicMode(double omega);

  [[nodiscard]] std::string kind() const override { return "bosonic"; }
  [[nodiscard]] std::string describe() const override;
  [[nodiscard]] double energy(double T) const override;
  [[nodiscard]] double entropy(double T) const override;
  [[nodiscard]] double heat_capacity(double T) const override;

  /// Bose-Einstein occupation 1/(exp(omega/T) - 1).
  [[nodiscard]] double occupation(double T) const;
  [[nodiscard]] double omega() const noexcept { return omega_; }

 private:
  double omega_;
};

/// One-dimensional waveguide of length L with linear dispersion omega_k = c k.
class Waveguide1D final : public EnvironmentModel {
 public:
  Waveguide1D(double length, double speed);

  [[nodiscard]] std::string kind() const override { return "waveguide"; }
  [[nodiscard]] std::string describe() const override;
  [[nodiscard]] double energy(double T) const override;
  [[nodiscard]] double entropy(double T) const override;
  [[nodiscard]] double heat_capacity(double T) const override;

  [[nodiscard]] double length() const noexcept { return length_; }
  [[nodiscard]] double speed() const noexcept { return speed_; }

 private:
  double length_;
  double speed_;
};

/// Debye phonon bath, C = a T^3. This is the low-temperature law and is
/// applied at every T; there is no Debye cutoff.
class DebyePhonon final : public EnvironmentModel {
 public:
  explicit DebyePhonon(double a);

  [[nodiscard]] std::string kind() const override { return "phonon"; }
  [[nodiscard]] std::string describe() const override;
  [[nodiscard]] double energy(double T) const override;
  [[nodiscard]] double entropy(double T) const override;
  [[nodiscard]] double heat_capacity(double T) const override;

  [[nodiscard]] double coefficient() const noexcept { return a_; }

 private:
  double a_;
};

/// Gapped (BCS-like) bath, C = b exp(-delta/T).
///
/// The Exact form integrates C analytically:
///   E(T) = b delta E2(delta/T) / (delta/T),   S(T) = b E1(delta/T).
/// The LowTemperature form keeps only the leading asymptotic terms
///   E(T) ~ b T^2/delta exp(-delta/T),  S(T) ~ b T/delta exp(-delta/T),
/// for which the entropy inverse is delta / W0(b / S). These two expressions
/// are not integrals of a common heat capacity, so dE/dT = C and dS/dT = C/T
/// hold only to leading order in T/delta for this form.
class GappedBCS final : public EnvironmentModel {
 public:
  enum class Form { Exact, LowTemperature };

  GappedBCS(double b, double gap, Form form = Form::Exact);

  [[nodiscard]] std::string kind() const override { return "gapped"; }
  [[nodiscard]] std::string describe() const override;
  [[nodiscard]] double energy(double T) const override;
  [[nodiscard]] double entropy(double T) const override;
  [[nodiscard]] double heat_capacity(double T) const override;

  [[nodiscard]] double coefficient() const noexcept { return b_; }
  [[nodiscard]] double gap() const noexcept { return gap_; }
  [[nodiscard]] Form form() const noexcept { return form_; }

 private:
  double b_;
  double gap_;
  Form form_;
};

/// Environment with a finite list of energy levels (Hamiltonian diagonal in
/// the level basis). Admits negative temperatures through the beta-based
/// accessors.
class FiniteSpectrum final : public EnvironmentModel {
 public:
  explicit FiniteSpectrum(std::vector<double> levels);

  [[nodiscard]] std::string kind() const override { return "spectrum"; }
  [[nodiscard]] std::string describe() const override;
  [[nodiscard]] double energy(double T) const override;
  [[nodiscard]] double entropy(double T) const override;
  [[nodiscard]] double heat_capacity(double T) const override;
  [[nodiscard]] bool bounded_spectrum() const override { return true; }
  [[nodiscard]] double max_entropy() const override;

  /// Gibbs populations for any beta in [-inf, +inf], ordered like levels().
  [[nodiscard]] std::vector<double> populations_at_beta(double beta) const;
  [[nodiscard]] double energy_at_beta(double beta) const;
  [[nodiscard]] double entropy_at_beta(double beta) const;

  /// Unique beta in [-inf, +inf] whose Gibbs state has the given energy.
  /// Throws DomainError outside [min level, max level].
  [[nodiscard]] double beta_for_energy(double energy) const;

  /// Sorted ascending.
  [[nodiscard]] std::span<const double> levels() const noexcept { return levels_; }
  [[nodiscard]] std::size_t dimension() const noexcept { return levels_.size(); }
  [[nodiscard]] std::size_t ground_degeneracy() const noexcept { return ground_degeneracy_; }

 private:
  std::vector<double> levels_;
  std::size_t ground_degeneracy_ = 1;
  std::size_t top_degeneracy_ = 1;
};

struct HeatCapacitySample {
  double temperature;
  double heat_capacity;
};

/// Heat capacity known only as samples. The table must start at T = 0 with
/// C = 0; C is interpolated linearly and E, S are the exact integrals of the
/// interpolant.
class TabulatedHeatCapacity final : public EnvironmentModel {
 public:
  explicit TabulatedHeatCapacity(std::vector<HeatCapacitySample> samples);

  /// Two-column CSV (T, C) with a header row.
  static TabulatedHeatCapacity from_csv(const std::filesystem::path& path);

  [[nodiscard]] std::string kind() const override { return "tabulated"; }
  [[nodiscard]] std::string describe() const override;
  [[nodiscard]] double energy(double T) const override;
  [[nodiscard]] double entropy(double T) const override;
  [[nodiscard]] double heat_capacity(double T) const override;

  [[nodiscard]] double max_temperature() const noexcept { return samples_.back().temperature; }

 private:
  // Index of the segment [T_i, T_{i+1}] containing T; throws OutOfTableRange.
  std::size_t segment(double T) const;

  std::vector<HeatCapacitySample> samples_;
  std::vector<double> cumulative_energy_;
  std::vector<double> cumulative_entropy_;
  std::string source_;
};

/// Builds a model from {"kind": ..., parameters...}. Recognized kinds and
/// fields:
///   bosonic   {omega}
///   waveguide {L, c}
///   phonon    {a}
///   gapped    {b, delta, form?: "exact" | "low_temperature"}
///   spectrum  {levels: [...]}
///   tabulated {csv: path}
/// Throws DomainError on unknown kinds, missing or invalid fields.
ModelPtr model_from_json(const nlohmann::json& config);

struct ModelKindInfo {
  std::string kind;
  std::string parameters;
  std::string description;
};

/// One entry per recognized model kind.
std::vector<ModelKindInfo> model_kinds();

}  // namespace landauer::env
