#include "landauer/specfun.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "landauer/errors.hpp"

namespace landauer::specfun {

namespace {

constexpr int kHalleyIterations = 50;
constexpr double kHalleyTolerance = 1e-14;
constexpr int kSeriesTerms = 200;
constexpr int kLentzIterations = 1000;
constexpr double kLentzTiny = 1e-300;
constexpr double kEpsilon = std::numeric_limits<double>::epsilon();
constexpr double kSeriesCrossover = 1.0;

}  // namespace

double lambert_w0(double x) {
  constexpr double branch = -1.0 / std::numbers::e;
  if (std::isnan(x)) throw DomainError("lambert_w0: NaN argument");
  if (x < branch) {
    // Accept round-off below the branch point.
    if (branch - x > 4.0 * kEpsilon) {
      throw DomainError("lambert_w0: argument " + std::to_string(x) + " below -1/e");
    }
    return -1.0;
  }
  if (x == branch) return -1.0;
  if (x == 0.0) return 0.0;
  if (std::isinf(x)) return x;

  double w;
  if (x >= -0.25) {
    w = std::log1p(x);
  } else {
    // Expansion about the branch point.
    const double p = std::sqrt(2.0 * (std::numbers::e * x + 1.0));
    w = -1.0 + p - p * p / 3.0 + 11.0 / 72.0 * p * p * p;
  }

  for (int it = 0; it < kHalleyIterations; ++it) {
    const double ew = std::exp(w);
    const double f = w * ew - x;
    const double wp1 = w + 1.0;
    if (wp1 == 0.0) break;
    const double step = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1));
    w -= step;
    if (std::abs(step) <= kHalleyTolerance * (1.0 + std::abs(w))) break;
  }
  return w;
}

namespace detail {

double gamma_upper_zero_series(double z) {
  // E1(z) = -gamma - ln z - sum_{k>=1} (-z)^k / (k k!)
  double sum = 0.0;
  double term = 1.0;  // (-z)^k / k!
  for (int k = 1; k <= kSeriesTerms; ++k) {
    term *= -z / k;
    const double contribution = term / k;
    sum += contribution;
    if (std::abs(contribution) < kEpsilon * std::abs(sum)) break;
  }
  return -std::numbers::egamma - std::log(z) - sum;
}

double exponential_integral_scaled_cf(int n, double z) {
  // Continued fraction for exp(z) E_n(z), evaluated with modified Lentz.
  double b = z + n;
  double c = 1.0 / kLentzTiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= kLentzIterations; ++i) {
    const double a = -static_cast<double>(i) * (n - 1 + i);
    b += 2.0;
    d = 1.0 / (a * d + b);
    c = b + a / c;
    const double delta = c * d;
    h *= delta;
    if (std::abs(delta - 1.0) < kEpsilon) return h;
  }
  throw NoConvergence("exponential_integral_scaled: continued fraction did not converge");
}

}  // namespace detail

double exponential_integral_scaled(int n, double z) {
  if (n != 1 && n != 2) throw DomainError("exponential_integral_scaled: n must be 1 or 2");
  if (!(z > 0.0)) throw DomainError("exponential_integral_scaled: z must be > 0");
  if (std::isinf(z)) return 0.0;
  if (z > kSeriesCrossover) return detail::exponential_integral_scaled_cf(n, z);
  const double e1 = detail::gamma_upper_zero_series(z);
  if (n == 1) return std::exp(z) * e1;
  // E2(z) = exp(-z) - z E1(z)
  return 1.0 - z * std::exp(z) * e1;
}

double gamma_upper_zero(double z) {
  if (!(z > 0.0)) {
    throw DomainError("gamma_upper_zero: z must be > 0, got " + std::to_string(z));
  }
  if (std::isinf(z)) return 0.0;
  if (z <= kSeriesCrossover) return detail::gamma_upper_zero_series(z);
  return detail::exponential_integral_scaled_cf(1, z) * std::exp(-z);
}

}  // namespace landauer::specfun
