#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "landauer/errors.hpp"
#include "landauer/quantum.hpp"
#include "support.hpp"

using namespace landauer;
using namespace landauer::quantum;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

HermitianMatrix hdiag(std::vector<double> v) { return HermitianMatrix::diagonal(v); }

DensityMatrix ddiag(std::vector<double> v) { return DensityMatrix::diagonal(v); }

DensityMatrix bell_state() {
  const double r = 1.0 / std::numbers::sqrt2;
  const std::vector<Complex> psi{r, 0.0, 0.0, r};
  return DensityMatrix::pure(psi);
}

// Gibbs energy and entropy from a plain list of levels.
struct Gibbs {
  double energy;
  double entropy;
};

Gibbs gibbs(const std::vector<double>& levels, double beta) {
  double lo = levels[0];
  for (double e : levels) lo = beta >= 0 ? std::min(lo, e) : std::max(lo, e);
  double z = 0.0, e1 = 0.0;
  for (double e : levels) {
    const double w = std::exp(-beta * (e - lo));
    z += w;
    e1 += w * e;
  }
  e1 /= z;
  return {e1, beta * (e1 - lo) + std::log(z)};
}

}  // namespace

TEST_CASE("thermal_state examples") {
  const auto hot = thermal_state(hdiag({0.5, -0.5}), 0.0);
  CHECK(max_abs_diff(hot.state.matrix(), ComplexMatrix::identity(2) * Complex(0.5)) < 1e-15);
  CHECK(hot.entropy == doctest::Approx(std::log(2.0)).epsilon(1e-14));

  const auto cold = thermal_state(hdiag({0.0, 1.0}), kInf);
  CHECK(cold.state(0, 0).real() == 1.0);
  CHECK(cold.state(1, 1).real() == 0.0);
  CHECK(cold.entropy == 0.0);

  const auto warm = thermal_state(hdiag({0.0, 1.0}), 1.0);
  const double p0 = 1.0 / (1.0 + std::exp(-1.0));
  CHECK(warm.state(0, 0).real() == doctest::Approx(p0).epsilon(1e-14));
  CHECK(warm.state(1, 1).real() == doctest::Approx(1.0 - p0).epsilon(1e-14));
  CHECK(warm.state(0, 0).real() == doctest::Approx(0.7311).epsilon(1e-4));
}

TEST_CASE("thermal_state data is self-consistent") {
  std::mt19937_64 gen(2);
  for (double beta : {0.1, 1.0, 10.0}) {
    const auto h = testing::random_hermitian(5, gen);
    const auto info = thermal_state(h, beta);
    CHECK(info.entropy == doctest::Approx(von_neumann_entropy(info.state)).epsilon(1e-10).scale(1.0));
    CHECK(info.energy == doctest::Approx(internal_energy(info.state, h)).epsilon(1e-10).scale(1.0));
  }
}

TEST_CASE("thermal_state at zero temperature mixes a degenerate ground space") {
  const auto info = thermal_state(hdiag({1.0, 0.0, 0.0}), kInf);
  CHECK(info.entropy == doctest::Approx(std::log(2.0)).epsilon(1e-14));
  CHECK(info.state(1, 1).real() == doctest::Approx(0.5));
  CHECK(info.energy == 0.0);
}

TEST_CASE("thermal_state survives extreme beta") {
  const auto info = thermal_state(hdiag({0.0, 1.0, 2.0}), 1e4);
  CHECK(info.state(0, 0).real() == 1.0);
  CHECK(std::isfinite(info.log_partition));
}

TEST_CASE("thermal_state rejects invalid beta") {
  CHECK_THROWS_AS(thermal_state(hdiag({0.0, 1.0}), -1.0), InvalidBeta);
  CHECK_THROWS_AS(thermal_state(hdiag({0.0, 1.0}), std::nan("")), InvalidBeta);
}

TEST_CASE("von_neumann_entropy") {
  CHECK(von_neumann_entropy(ddiag({1.0, 0.0})) == 0.0);
  CHECK(von_neumann_entropy(DensityMatrix::maximally_mixed(2)) ==
        doctest::Approx(std::log(2.0)).epsilon(1e-14));
  const double expected = -0.9 * std::log(0.9) - 0.1 * std::log(0.1);
  CHECK(von_neumann_entropy(ddiag({0.9, 0.1})) == doctest::Approx(expected).epsilon(1e-14));
  CHECK(expected == doctest::Approx(0.325083).epsilon(1e-6));
}

TEST_CASE("entropy is unitarily invariant") {
  std::mt19937_64 gen(9);
  for (std::size_t n : {2u, 4u, 7u}) {
    const auto rho = testing::random_density(n, gen);
    const auto u = linalg::unitary_from_hamiltonian(testing::random_hermitian(n, gen), 1.3);
    CHECK(std::abs(von_neumann_entropy(evolve(rho, u)) - von_neumann_entropy(rho)) < 1e-10);
  }
}

TEST_CASE("relative_entropy") {
  const auto rho = ddiag({0.9, 0.1});
  CHECK(std::abs(relative_entropy(rho, rho)) < 1e-14);
  const double expected = 0.9 * std::log(1.8) + 0.1 * std::log(0.2);
  CHECK(relative_entropy(rho, DensityMatrix::maximally_mixed(2)) ==
        doctest::Approx(expected).epsilon(1e-13));
  CHECK(expected == doctest::Approx(0.368064).epsilon(1e-6));
  CHECK(relative_entropy(DensityMatrix::maximally_mixed(2), ddiag({1.0, 0.0})) == kInf);
  CHECK_THROWS_AS(relative_entropy(rho, DensityMatrix::maximally_mixed(3)), DimensionMismatch);
}

TEST_CASE("relative_entropy_to_thermal matches the generic formula") {
  std::mt19937_64 gen(13);
  const auto h = testing::random_hermitian(4, gen);
  const auto eig = linalg::hermitian_eig(h);
  // Moderate beta keeps the generic logarithm of the Gibbs state well conditioned.
  for (double beta : {0.1, 0.5, 1.0}) {
    const auto rho = testing::random_density(4, gen);
    const double generic = relative_entropy(rho, thermal_state(h, beta).state);
    CHECK(relative_entropy_to_thermal(rho, eig, beta) ==
          doctest::Approx(generic).epsilon(1e-10).scale(1.0));
  }
  // Outside the ground space at T = 0 the divergence is infinite.
  const auto e2 = linalg::hermitian_eig(hdiag({0.0, 1.0}));
  CHECK(relative_entropy_to_thermal(DensityMatrix::maximally_mixed(2), e2, kInf) == kInf);
  CHECK(relative_entropy_to_thermal(ddiag({1.0, 0.0}), e2, kInf) == 0.0);
  // Stays finite where the thermal populations underflow the support threshold.
  const double d = relative_entropy_to_thermal(DensityMatrix::maximally_mixed(2), e2, 100.0);
  CHECK(d == doctest::Approx(50.0 - std::log(2.0)).epsilon(1e-12));
}

TEST_CASE("mutual_information") {
  std::mt19937_64 gen(17);
  const auto product = tensor(testing::random_density(2, gen), testing::random_density(3, gen));
  CHECK(std::abs(mutual_information(product, 2, 3)) < 1e-12);
  CHECK(mutual_information(bell_state(), 2, 2) == doctest::Approx(2.0 * std::log(2.0)).epsilon(1e-12));
  CHECK(mutual_information(ddiag({0.5, 0.0, 0.0, 0.5}), 2, 2) ==
        doctest::Approx(std::log(2.0)).epsilon(1e-14));
  CHECK_THROWS_AS(mutual_information(product, 3, 3), DimensionMismatch);
}

TEST_CASE("mutual_information is non-negative on random joints") {
  std::mt19937_64 gen(23);
  for (int k = 0; k < 40; ++k) {
    const std::size_t ds = 2 + k % 2, de = 2 + k % 4;
    CHECK(mutual_information(testing::random_density(ds * de, gen), ds, de) >= -1e-10);
  }
}

TEST_CASE("internal_energy") {
  const auto h = hdiag({0.0, 1.0});
  CHECK(internal_energy(ddiag({1.0, 0.0}), h) == 0.0);
  CHECK(internal_energy(DensityMatrix::maximally_mixed(2), h) == 0.5);
  const double p1 = std::exp(-1.0) / (1.0 + std::exp(-1.0));
  CHECK(internal_energy(ddiag({1.0 - p1, p1}), h) == doctest::Approx(0.2689).epsilon(1e-4));
  CHECK_THROWS_AS(internal_energy(DensityMatrix::maximally_mixed(3), h), DimensionMismatch);
}

TEST_CASE("nonequilibrium_free_energy") {
  const auto h = hdiag({0.0, 1.0});
  const auto rho = ddiag({0.3, 0.7});
  CHECK(nonequilibrium_free_energy(rho, h, 0.0) == internal_energy(rho, h));
  CHECK(nonequilibrium_free_energy(DensityMatrix::maximally_mixed(2), h, 1.0) ==
        doctest::Approx(0.5 - std::log(2.0)).epsilon(1e-14));

  for (double T : {0.1, 1.0, 10.0}) {
    const auto th = thermal_state(h, 1.0 / T);
    const double z = 1.0 + std::exp(-1.0 / T);
    CHECK(nonequilibrium_free_energy(th.state, h, T) == doctest::Approx(-T * std::log(z)).epsilon(1e-12));
  }
}

TEST_CASE("free energy decomposes into equilibrium part plus divergence") {
  std::mt19937_64 gen(29);
  for (std::size_t n = 2; n <= 8; n += 2) {
    const auto h = testing::random_hermitian(n, gen);
    for (double T : {0.1, 1.0, 10.0}) {
      const auto rho = testing::random_density(n, gen);
      const auto th = thermal_state(h, 1.0 / T);
      const double f_eq = -T * th.log_partition;
      const double rhs = f_eq + T * relative_entropy_to_thermal(rho, linalg::hermitian_eig(h), 1.0 / T);
      CHECK(nonequilibrium_free_energy(rho, h, T) == doctest::Approx(rhs).epsilon(1e-10).scale(1.0));
    }
  }
}

TEST_CASE("energy-matched Gibbs state maximizes entropy") {
  std::mt19937_64 gen(31);
  for (int k = 0; k < 20; ++k) {
    const std::size_t n = 2 + k % 5;
    const auto h = testing::random_hermitian(n, gen);
    const auto levels = linalg::hermitian_eig(h).eigenvalues;
    const auto rho = testing::random_density(n, gen);
    const double target = internal_energy(rho, h);
    // Bisection on the decreasing map beta -> E(beta).
    double lo = -200.0, hi = 200.0;
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      (gibbs(levels, mid).energy > target ? lo : hi) = mid;
    }
    CHECK(gibbs(levels, 0.5 * (lo + hi)).entropy >= von_neumann_entropy(rho) - 1e-10);
  }
}

TEST_CASE("DensityMatrix validation") {
  CHECK_THROWS_AS(ddiag({0.6, 0.6}), InvalidState);
  CHECK_THROWS_AS(ddiag({1.1, -0.1}), InvalidState);
  const ComplexMatrix skew{{0.5, Complex(0.0, 0.3)}, {Complex(0.0, 0.3), 0.5}};
  CHECK_THROWS_AS(DensityMatrix{skew}, Error);
  CHECK(DensityMatrix::maximally_mixed(1)(0, 0) == Complex(1.0));
}

TEST_CASE("partial_trace and tensor on states") {
  std::mt19937_64 gen(37);
  const auto a = testing::random_density(3, gen);
  const auto b = testing::random_density(2, gen);
  const auto ab = tensor(a, b);
  CHECK(max_abs_diff(partial_trace(ab, 3, 2, Keep::System).matrix(), a.matrix()) < 1e-14);
  CHECK(max_abs_diff(partial_trace(ab, 3, 2, Keep::Environment).matrix(), b.matrix()) < 1e-14);
}
