#include "landauer/envmodels.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "landauer/detail/roots.hpp"
#include "landauer/errors.hpp"
#include "landauer/specfun.hpp"

namespace landauer::env {

namespace {

std::string fmt_param(const char* name, double value) {
  std::ostringstream os;
  os.precision(17);
  os << name << '=' << value;
  return os.str();
}

void require_positive(double value, const char* what) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw DomainError(std::string(what) + " must be finite and > 0");
  }
}

// Count of entries within tolerance of the front (ascending) or back.
std::size_t degeneracy(std::span<const double> sorted, bool from_top) {
  double scale = 1.0;
  for (double x : sorted) scale = std::max(scale, std::abs(x));
  const double tol = 1e-12 * scale;
  std::size_t g = 0;
  if (from_top) {
    while (g < sorted.size() && sorted.back() - sorted[sorted.size() - 1 - g] <= tol) ++g;
  } else {
    while (g < sorted.size() && sorted[g] - sorted.front() <= tol) ++g;
  }
  return g;
}

}  // namespace

// --- EnvironmentModel ------------------------------------------------------

void EnvironmentModel::check_temperature(double T) const {
  if (std::isnan(T) || T < 0.0) {
    throw DomainError(kind() + ": temperature must be >= 0");
  }
  if (std::isinf(T) && !bounded_spectrum()) {
    throw DomainError(kind() + ": infinite temperature requires a bounded spectrum");
  }
}

EntropyRange EnvironmentModel::entropy_range(double T) const {
  const double s = entropy(T);
  return EntropyRange{entropy(0.0) - s, max_entropy() - s};
}

// --- BosonicMode -----------------------------------------------------------

BosonicMode::BosonicMode(double omega) : omega_(omega) { require_positive(omega, "omega"); }

std::string BosonicMode::describe() const { return "bosonic(" + fmt_param("omega", omega_) + ")"; }

double BosonicMode::occupation(double T) const {
  check_temperature(T);
  if (T == 0.0) return 0.0;
  return 1.0 / std::expm1(omega_ / T);
}

double BosonicMode::energy(double T) const { return omega_ * occupation(T); }

double BosonicMode::entropy(double T) const {
  check_temperature(T);
  if (T == 0.0) return 0.0;
  // (n+1) ln(n+1) - n ln n written in x = omega/T to stay accurate for n -> 0.
  const double x = omega_ / T;
  const double n = 1.0 / std::expm1(x);
  return x * n - std::log1p(-std::exp(-x));
}

double BosonicMode::heat_capacity(double T) const {
  check_temperature(T);
  if (T == 0.0) return 0.0;
  const double x = omega_ / T;
  const double n = 1.0 / std::expm1(x);
  return x * x * n * (n + 1.0);
}

// --- Waveguide1D -----------------------------------------------------------

Waveguide1D::Waveguide1D(double length, double speed) : length_(length), speed_(speed) {
  require_positive(length, "L");
  require_positive(speed, "c");
}

std::string Waveguide1D::describe() const {
  return "waveguide(" + fmt_param("L", length_) + ", " + fmt_param("c", speed_) + ")";
}

double Waveguide1D::energy(double T) const {
  check_temperature(T);
  return std::numbers::pi * length_ / (12.0 * speed_) * T * T;
}

double Waveguide1D::entropy(double T) const {
  check_temperature(T);
  return std::numbers::pi * length_ / (6.0 * speed_) * T;
}

double Waveguide1D::heat_capacity(double T) const { return entropy(T); }

// --- DebyePhonon -----------------------------------------------------------

DebyePhonon::DebyePhonon(double a) : a_(a) { require_positive(a, "a"); }

std::string DebyePhonon::describe() const { return "phonon(" + fmt_param("a", a_) + ")"; }

double DebyePhonon::energy(double T) const {
  check_temperature(T);
  return a_ * T * T * T * T / 4.0;
}

double DebyePhonon::entropy(double T) const {
  check_temperature(T);
  return a_ * T * T * T / 3.0;
}

double DebyePhonon::heat_capacity(double T) const {
  check_temperature(T);
  return a_ * T * T * T;
}

// --- GappedBCS -------------------------------------------------------------

GappedBCS::GappedBCS(double b, double gap, Form form) : b_(b), gap_(gap), form_(form) {
  require_positive(b, "b");
  require_positive(gap, "delta");
}

std::string GappedBCS::describe() const {
  return "gapped(" + fmt_param("b", b_) + ", " + fmt_param("delta", gap_) +
         (form_ == Form::Exact ? ", exact)" : ", low_temperature)");
}

double GappedBCS::energy(double T) const {
  check_temperature(T);
  if (T == 0.0) return 0.0;
  const double z = gap_ / T;
  if (form_ == Form::LowTemperature) return b_ * T * T / gap_ * std::exp(-z);
  return b_ * gap_ * std::exp(-z) * specfun::exponential_integral_scaled(2, z) / z;
}

double GappedBCS::entropy(double T) const {
  check_temperature(T);
  if (T == 0.0) return 0.0;
  const double z = gap_ / T;
  if (form_ == Form::LowTemperature) return b_ * T / gap_ * std::exp(-z);
  return b_ * std::exp(-z) * specfun::exponential_integral_scaled(1, z);
}

double GappedBCS::heat_capacity(double T) const {
  check_temperature(T);
  if (T == 0.0) return 0.0;
  return b_ * std::exp(-gap_ / T);
}

// --- FiniteSpectrum --------------------------------------------------------

FiniteSpectrum::FiniteSpectrum(std::vector<double> levels) : levels_(std::move(levels)) {
  if (levels_.size() < 2) {
    throw DomainError("spectrum: at least two levels are required");
  }
  for (double e : levels_)
    if (!std::isfinite(e)) throw DomainError("spectrum: levels must be finite");
  std::sort(levels_.begin(), levels_.end());
  ground_degeneracy_ = degeneracy(levels_, false);
  top_degeneracy_ = degeneracy(levels_, true);
}

std::string FiniteSpectrum::describe() const {
  std::ostringstream os;
  os.precision(17);
  os << "spectrum(levels=[";
  for (std::size_t i = 0; i < levels_.size(); ++i) os << (i ? "," : "") << levels_[i];
  os << "])";
  return os.str();
}

std::vector<double> FiniteSpectrum::populations_at_beta(double beta) const {
  if (std::isnan(beta)) throw DomainError("spectrum: beta is NaN");
  const std::size_t n = levels_.size();
  std::vector<double> p(n, 0.0);
  if (std::isinf(beta)) {
    if (beta > 0.0) {
      for (std::size_t i = 0; i < ground_degeneracy_; ++i) p[i] = 1.0 / ground_degeneracy_;
    } else {
      for (std::size_t i = n - top_degeneracy_; i < n; ++i) p[i] = 1.0 / top_degeneracy_;
    }
    return p;
  }
  const double ref = beta >= 0.0 ? levels_.front() : levels_.back();
  double z = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    p[i] = std::exp(-beta * (levels_[i] - ref));
    z += p[i];
  }
  for (double& x : p) x /= z;
  return p;
}

double FiniteSpectrum::energy_at_beta(double beta) const {
  const auto p = populations_at_beta(beta);
  double e = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) e += p[i] * levels_[i];
  return e;
}

double FiniteSpectrum::entropy_at_beta(double beta) const {
  if (std::isinf(beta)) {
    return std::log(static_cast<double>(beta > 0.0 ? ground_degeneracy_ : top_degeneracy_));
  }
  if (std::isnan(beta)) throw DomainError("spectrum: beta is NaN");
  const double ref = beta >= 0.0 ? levels_.front() : levels_.back();
  double z = 0.0;
  double weighted = 0.0;
  for (double e : levels_) {
    const double w = std::exp(-beta * (e - ref));
    z += w;
    weighted += w * (e - ref);
  }
  return beta * weighted / z + std::log(z);
}

namespace {
double beta_of(double T) {
  if (T == 0.0) return kInfinity;
  if (std::isinf(T)) return 0.0;
  return 1.0 / T;
}
}  // namespace

double FiniteSpectrum::energy(double T) const {
  check_temperature(T);
  return energy_at_beta(beta_of(T));
}

double FiniteSpectrum::entropy(double T) const {
  check_temperature(T);
  return entropy_at_beta(beta_of(T));
}

double FiniteSpectrum::heat_capacity(double T) const {
  check_temperature(T);
  if (T == 0.0 || std::isinf(T)) return 0.0;
  const double beta = 1.0 / T;
  const auto p = populations_at_beta(beta);
  double mean = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) mean += p[i] * levels_[i];
  double var = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) var += p[i] * (levels_[i] - mean) * (levels_[i] - mean);
  return beta * beta * var;
}

double FiniteSpectrum::max_entropy() const {
  return std::log(static_cast<double>(levels_.size()));
}

double FiniteSpectrum::beta_for_energy(double energy) const {
  const double lo = levels_.front();
  const double hi = levels_.back();
  const double tol = 1e-12 * std::max({1.0, std::abs(lo), std::abs(hi)});
  if (energy < lo - tol || energy > hi + tol) {
    throw DomainError("spectrum: energy outside the spectrum");
  }
  if (hi - lo <= tol) return 0.0;
  if (energy <= lo) return kInfinity;
  if (energy >= hi) return -kInfinity;
  auto f = [&](double beta) { return energy_at_beta(beta) - energy; };
  const double f0 = f(0.0);
  if (f0 == 0.0) return 0.0;
  // Energy decreases with beta: a positive residual means beta must grow.
  const double direction = f0 > 0.0 ? 1.0 : -1.0;
  double inner = 0.0;
  double f_inner = f0;
  double outer = direction;
  double f_outer = f(outer);
  while ((f_outer > 0.0) == (f0 > 0.0) && f_outer != 0.0) {
    inner = outer;
    f_inner = f_outer;
    outer *= 2.0;
    if (std::abs(outer) > 1e300) return direction * kInfinity;
    f_outer = f(outer);
  }
  return detail::brent_root(f, inner, outer, f_inner, f_outer);
}

// --- TabulatedHeatCapacity -------------------------------------------------

TabulatedHeatCapacity::TabulatedHeatCapacity(std::vector<HeatCapacitySample> samples)
    : samples_(std::move(samples)) {
  if (samples_.size() < 2) {
    throw DomainError("tabulated: at least two samples are required");
  }
  if (samples_.front().temperature != 0.0) {
    throw DomainError("tabulated: the table must start at T = 0");
  }
  if (samples_.front().heat_capacity != 0.0) {
    throw DomainError("tabulated: C(0) must be 0, otherwise the entropy integral diverges");
  }
  for (std::size_t i = 0; i < samples_.size(); ++i) {
    const auto& s = samples_[i];
    if (!std::isfinite(s.temperature) || !std::isfinite(s.heat_capacity) ||
        s.heat_capacity < 0.0) {
      throw DomainError("tabulated: samples must be finite with C >= 0");
    }
    if (i > 0 && !(s.temperature > samples_[i - 1].temperature)) {
      throw DomainError("tabulated: temperatures must be strictly increasing");
    }
  }
  cumulative_energy_.assign(samples_.size(), 0.0);
  cumulative_entropy_.assign(samples_.size(), 0.0);
  for (std::size_t i = 0; i + 1 < samples_.size(); ++i) {
    const auto& a = samples_[i];
    const auto& b = samples_[i + 1];
    const double h = b.temperature - a.temperature;
    const double slope = (b.heat_capacity - a.heat_capacity) / h;
    const double intercept = a.heat_capacity - slope * a.temperature;
    cumulative_energy_[i + 1] = cumulative_energy_[i] + 0.5 * (a.heat_capacity + b.heat_capacity) * h;
    double ds = slope * h;
    if (a.temperature > 0.0) ds += intercept * std::log(b.temperature / a.temperature);
    cumulative_entropy_[i + 1] = cumulative_entropy_[i] + ds;
  }
  source_ = std::to_string(samples_.size()) + " samples";
}

TabulatedHeatCapacity TabulatedHeatCapacity::from_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("tabulated: cannot open " + path.string());
  std::vector<HeatCapacitySample> samples;
  std::string line;
  bool header = true;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (header) {
      header = false;
      continue;
    }
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      throw DomainError("tabulated: " + path.string() + ":" + std::to_string(line_no) +
                        ": expected two comma-separated columns");
    }
    auto parse = [&](const std::string& field) {
      std::size_t used = 0;
      double value = 0.0;
      try {
        value = std::stod(field, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || field.find_first_not_of(" \t", used) != std::string::npos) {
        throw DomainError("tabulated: " + path.string() + ":" + std::to_string(line_no) +
                          ": malformed number '" + field + "'");
      }
      return value;
    };
    samples.push_back({parse(line.substr(0, comma)), parse(line.substr(comma + 1))});
  }
  TabulatedHeatCapacity model(std::move(samples));
  model.source_ = path.string();
  return model;
}

std::string TabulatedHeatCapacity::describe() const { return "tabulated(" + source_ + ")"; }

std::size_t TabulatedHeatCapacity::segment(double T) const {
  check_temperature(T);
  if (T > samples_.back().temperature) {
    throw OutOfTableRange("tabulated: T = " + std::to_string(T) + " beyond table maximum " +
                          std::to_string(samples_.back().temperature));
  }
  auto it = std::upper_bound(samples_.begin(), samples_.end(), T,
                             [](double t, const HeatCapacitySample& s) { return t < s.temperature; });
  const auto idx = static_cast<std::size_t>(std::distance(samples_.begin(), it));
  return std::min(idx == 0 ? 0 : idx - 1, samples_.size() - 2);
}

double TabulatedHeatCapacity::heat_capacity(double T) const {
  const std::size_t i = segment(T);
  const auto& a = samples_[i];
  const auto& b = samples_[i + 1];
  const double slope = (b.heat_capacity - a.heat_capacity) / (b.temperature - a.temperature);
  return a.heat_capacity + slope * (T - a.temperature);
}

double TabulatedHeatCapacity::energy(double T) const {
  const std::size_t i = segment(T);
  const auto& a = samples_[i];
  const auto& b = samples_[i + 1];
  const double slope = (b.heat_capacity - a.heat_capacity) / (b.temperature - a.temperature);
  const double h = T - a.temperature;
  return cumulative_energy_[i] + a.heat_capacity * h + 0.5 * slope * h * h;
}

double TabulatedHeatCapacity::entropy(double T) const {
  const std::size_t i = segment(T);
  const auto& a = samples_[i];
  const auto& b = samples_[i + 1];
  const double slope = (b.heat_capacity - a.heat_capacity) / (b.temperature - a.temperature);
  const double intercept = a.heat_capacity - slope * a.temperature;
  double s = cumulative_entropy_[i] + slope * (T - a.temperature);
  if (a.temperature > 0.0) s += intercept * std::log(T / a.temperature);
  return s;
}

// --- configuration ---------------------------------------------------------

namespace {

double number_field(const nlohmann::json& config, const char* key) {
  if (!config.contains(key)) {
    throw DomainError(std::string("model config: missing field '") + key + "'");
  }
  const auto& v = config.at(key);
  if (!v.is_number()) {
    throw DomainError(std::string("model config: field '") + key + "' must be a number");
  }
  return v.get<double>();
}

}  // namespace

ModelPtr model_from_json(const nlohmann::json& config) {
  if (!config.is_object()) throw DomainError("model config: expected a JSON object");
  if (!config.contains("kind") || !config.at("kind").is_string()) {
    throw DomainError("model config: missing string field 'kind'");
  }
  const auto kind = config.at("kind").get<std::string>();
  if (kind == "bosonic") return std::make_shared<BosonicMode>(number_field(config, "omega"));
  if (kind == "waveguide") {
    return std::make_shared<Waveguide1D>(number_field(config, "L"), number_field(config, "c"));
  }
  if (kind == "phonon") return std::make_shared<DebyePhonon>(number_field(config, "a"));
  if (kind == "gapped") {
    auto form = GappedBCS::Form::Exact;
    if (config.contains("form")) {
      const auto& f = config.at("form");
      if (!f.is_string()) throw DomainError("model config: 'form' must be a string");
      const auto name = f.get<std::string>();
      if (name == "low_temperature") {
        form = GappedBCS::Form::LowTemperature;
      } else if (name != "exact") {
        throw DomainError("model config: unknown gapped form '" + name + "'");
      }
    }
    return std::make_shared<GappedBCS>(number_field(config, "b"), number_field(config, "delta"),
                                       form);
  }
  if (kind == "spectrum") {
    if (!config.contains("levels") || !config.at("levels").is_array()) {
      throw DomainError("model config: 'levels' must be an array of numbers");
    }
    std::vector<double> levels;
    for (const auto& v : config.at("levels")) {
      if (!v.is_number()) throw DomainError("model config: 'levels' must contain numbers");
      levels.push_back(v.get<double>());
    }
    return std::make_shared<FiniteSpectrum>(std::move(levels));
  }
  if (kind == "tabulated") {
    if (!config.contains("csv") || !config.at("csv").is_string()) {
      throw DomainError("model config: 'csv' must be a path string");
    }
    return std::make_shared<TabulatedHeatCapacity>(
        TabulatedHeatCapacity::from_csv(config.at("csv").get<std::string>()));
  }
  throw DomainError("model config: unknown kind '" + kind + "'");
}

std::vector<ModelKindInfo> model_kinds() {
  return {
      {"bosonic", "omega", "single bosonic mode of frequency omega (energy)"},
      {"waveguide", "L, c", "1D waveguide of length L (length) and speed of light c (speed)"},
      {"phonon", "a", "phonon bath with C = a T^3 (a in 1/temperature^3)"},
      {"gapped", "b, delta",
       "gapped bath with C = b exp(-delta/T); b dimensionless, delta energy; "
       "optional form = exact | low_temperature"},
      {"spectrum", "levels", "finite level list (energies); admits negative temperatures"},
      {"tabulated", "csv path",
       "heat capacity samples, two CSV columns T, C with header; first row T = 0, C = 0"},
  };
}

}  // namespace landauer::env
