#include <doctest.h>

#include <cmath>

#include "hartmann/fdsolver.hpp"
#include "hartmann/susy.hpp"

using namespace hartmann;

namespace {
TridiagonalOperator two_by_two() {
  TridiagonalOperator T;
  T.diag = {2.0, 2.0};
  T.offdiag = {-1.0};
  return T;
}
} // namespace

TEST_CASE("discretization") {
  SUBCASE("pure Laplacian on a coarse grid") {
    const RadialGrid grid(4.0, 3); // h = 1
    const auto T = discretize(0.0, 0.0, grid);
    REQUIRE(T.size() == 3);
    for (double d : T.diag) {
      CHECK(d == doctest::Approx(1.0));
    }
    for (double e : T.offdiag) {
      CHECK(e == doctest::Approx(-0.5));
    }
  }
  SUBCASE("matrix entries follow the stencil") {
    const RadialGrid grid(12.0, 47);
    const auto T = discretize(1.3, 0.7, grid);
    const double h = grid.h();
    for (int i = 0; i < grid.n; ++i) {
      const double r = grid.node(i);
      CHECK(T.diag[i] == doctest::Approx(1.0 / (h * h) +
                                         0.5 * 1.3 * 2.3 / (r * r) - 0.7 / r));
    }
  }
  CHECK_THROWS_AS(RadialGrid(-1.0, 10), DomainError);
  CHECK_THROWS_AS(discretize(-1.2, 1.0, RadialGrid(5.0, 16)), DomainError);
}

TEST_CASE("sturm counting") {
  const auto T = two_by_two(); // eigenvalues 1 and 3
  CHECK(sturm_count(T, 2.0) == 1);
  CHECK(sturm_count(T, 0.5) == 0);
  CHECK(sturm_count(T, 10.0) == 2);
  SUBCASE("monotone in lambda, saturates at n") {
    const auto H = discretize(0.0, 1.0, RadialGrid(30.0, 200));
    int prev = 0;
    for (double lam = -1.0; lam < 5.0; lam += 0.25) {
      const int c = sturm_count(H, lam);
      CHECK(c >= prev);
      prev = c;
    }
    CHECK(sturm_count(H, 1e12) == 200);
  }
}

TEST_CASE("bisection eigenvalues") {
  SUBCASE("2x2 analytic case") {
    const auto eig = lowest_eigenvalues(two_by_two(), 2, 1e-12);
    CHECK(eig[0] == doctest::Approx(1.0).epsilon(1e-11));
    CHECK(eig[1] == doctest::Approx(3.0).epsilon(1e-11));
  }
  SUBCASE("hydrogen-like levels at L=0, gamma=1") {
    const RadialGrid grid(60.0, 6000);
    const auto eig = lowest_eigenvalues(discretize(0.0, 1.0, grid), 3, 1e-9);
    CHECK(std::fabs(eig[0] - (-0.5)) <= 2e-5);
    CHECK(std::fabs(eig[1] - (-0.125)) <= 2e-5);
    CHECK(std::fabs(eig[2] - (-1.0 / 18.0)) <= 2e-5);
  }
  SUBCASE("non-integer L") {
    const RadialGrid grid(60.0, 6000);
    const auto eig = lowest_eigenvalues(discretize(0.5, 1.0, grid), 1, 1e-9);
    CHECK(std::fabs(eig[0] - (-1.0 / 4.5)) <= 1e-4);
  }
  CHECK_THROWS_AS(lowest_eigenvalues(two_by_two(), 0, 1e-8), DomainError);
  CHECK_THROWS_AS(lowest_eigenvalues(two_by_two(), 2, -1.0), DomainError);
}

TEST_CASE("grid convergence is second order") {
  for (const double L : {0.0, 0.5, 1.0}) {
    const double want = energy_internal(L + 1.0, 1.0);
    const double r_max = 30.0 * (L + 1.0);
    const auto err = [&](int n) {
      const auto eig =
          lowest_eigenvalues(discretize(L, 1.0, RadialGrid(r_max, n)), 1, 1e-11);
      return std::fabs(eig[0] - want);
    };
    const double ratio = err(1500) / err(3001); // halving h
    CHECK(ratio >= 3.5);
    CHECK(ratio <= 4.5);
  }
}

TEST_CASE("eigenvectors by inverse iteration") {
  SUBCASE("2x2 case") {
    const auto v = eigenvector(two_by_two(), 1.0);
    CHECK(v[0] == doctest::Approx(std::sqrt(0.5)).epsilon(1e-9));
    CHECK(v[1] == doctest::Approx(std::sqrt(0.5)).epsilon(1e-9));
  }
  SUBCASE("ground state matches the analytic wavefunction") {
    const RadialGrid grid(30.0, 3000);
    const auto T = discretize(0.0, 1.0, grid);
    const auto eig = lowest_eigenvalues(T, 2, 1e-9);
    const auto v = eigenvector(T, eig[0]);
    CHECK(eigen_residual(T, eig[0], v) <= 1e-6);
    const QuasiPoly u = ground_state_u(0.0, 1.0);
    const double scale = 1.0 / std::sqrt(grid.h());
    for (int i = 0; i < grid.n; i += 7) {
      CHECK(std::fabs(v[i] * scale - u.evaluate(grid.node(i))) <= 1e-3);
    }
    SUBCASE("orthogonality of the two lowest eigenvectors") {
      const auto w = eigenvector(T, eig[1]);
      double dot = 0.0;
      for (int i = 0; i < grid.n; ++i) {
        dot += v[i] * w[i];
      }
      CHECK(std::fabs(dot) <= 1e-6);
    }
  }
}

TEST_CASE("partner isospectrality on the grid") {
  SUBCASE("L=0 versus L=1 at gamma=1") {
    const RadialGrid grid(120.0, 6000);
    const auto report = verify_isospectrality(0.0, 1.0, grid, 3);
    CHECK(report.pass);
    CHECK(report.extra_ground_state);
    CHECK(std::fabs(report.lower_spectrum[1] - (-0.125)) <= 1e-4);
    CHECK(std::fabs(report.upper_spectrum[0] - (-0.125)) <= 1e-4);
  }
  SUBCASE("non-integer L has no closed-form dependence") {
    const RadialGrid grid(160.0, 6000);
    const auto report = verify_isospectrality(2.7, 1.3, grid, 3);
    CHECK(report.pass);
  }
}

TEST_CASE("first-order ODE route to the ground state") {
  SUBCASE("L=0, gamma=1 against 2 r e^-r") {
    const RadialGrid grid(30.0, 6000); // h = 0.005
    const auto psi = integrate_ground_state_ode(0.0, 1.0, grid);
    const QuasiPoly u = ground_state_u(0.0, 1.0);
    double dev = 0.0;
    for (int i = 0; i < grid.n; ++i) {
      dev = std::max(dev, std::fabs(psi[i] - u.evaluate(grid.node(i))));
    }
    CHECK(dev <= 1e-6);
  }
  SUBCASE("L=1.5, gamma=2") {
    const RadialGrid grid(40.0, 8000);
    const auto psi = integrate_ground_state_ode(1.5, 2.0, grid);
    const QuasiPoly u = ground_state_u(1.5, 2.0);
    double dev = 0.0;
    for (int i = 0; i < grid.n; ++i) {
      dev = std::max(dev, std::fabs(psi[i] - u.evaluate(grid.node(i))));
    }
    CHECK(dev <= 1e-6);
  }
  SUBCASE("local growth near the origin") {
    // psi(2h)/psi(h) -> 2^(L+1) e^(-kappa h) as h -> 0
    const double L = 0.7, gamma = 1.0;
    const double kappa = gamma / (L + 1.0);
    for (const int n : {2000, 4000}) {
      const RadialGrid grid(10.0, n);
      const auto psi = integrate_ground_state_ode(L, gamma, grid);
      const double h = grid.h();
      CHECK(psi[1] / psi[0] ==
            doctest::Approx(std::pow(2.0, L + 1.0) * std::exp(-kappa * h))
                .epsilon(1e-6));
    }
  }
}
