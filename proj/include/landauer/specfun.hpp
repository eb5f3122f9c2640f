#pragma once

namespace landauer::specfun {

/// Principal branch W0 of the Lambert product-log, defined for x >= -1/e.
/// Throws DomainError below the branch point.
double lambert_w0(double x);

/// Upper incomplete Gamma function at order zero, Gamma(0, z) = E1(z), for z > 0.
/// Underflows to 0 for z beyond ~745.
double gamma_upper_zero(double z);

/// exp(z) * E_n(z) for n in {1, 2} and z > 0. Stays finite where E_n underflows.
double exponential_integral_scaled(int n, double z);

namespace detail {

/// Convergent power series for E1(z); accurate for z <= 1.
double gamma_upper_zero_series(double z);

/// Modified Lentz evaluation of exp(z) E_n(z); accurate for z >= 1.
double exponential_integral_scaled_cf(int n, double z);

}  // namespace detail

}  // namespace landauer::specfun
