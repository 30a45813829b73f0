#include "hartmann/validation.hpp"

#include <algorithm>
#include <cmath>

#include "hartmann/fdsolver.hpp"
#include "hartmann/susy.hpp"

namespace hartmann {

namespace {

double shift_const(double L, double gamma) {
  const double k = gamma / (L + 1.0);
  return 0.5 * k * k;
}

// Self-test corruption: a 1% change of the decay rate breaks the eigenvalue
// relation for every state, including single-term nodeless ones.
QuasiPoly perturb_decay(const QuasiPoly& f) {
  return QuasiPoly(f.alpha(), 1.01 * f.kappa(), f.coeffs());
}

} // namespace

ValidationReport run_validation(const ValidationOptions& opts) {
  const HartmannParams params(opts.eta, opts.sigma);
  const double gamma = params.gamma();
  const double M_abs = derive_quantum_numbers(params, opts.m, 0, 0).M_abs;
  const bool algebra = opts.suite != ValidationSuite::numeric;
  const bool numeric = opts.suite != ValidationSuite::algebra;

  ValidationReport report{};
  const auto add = [&](std::string name, double residual, double tol) {
    report.checks.push_back({std::move(name), residual, tol, residual <= tol});
  };

  if (algebra) {
    double riccati = 0.0;
    double annihilation = 0.0;
    for (int j = 0; j < opts.max_n; ++j) {
      const double L = M_abs + j;
      riccati = std::max(riccati, riccati_residual({L, gamma}));
      annihilation = std::max(annihilation, annihilation_residual(L, gamma));
    }
    add("riccati-expansion", riccati, 1e-12);
    add("annihilation", annihilation, 1e-12);

    // Generic probes exercise the factorization and block identities away
    // from the eigenfunctions.
    std::vector<QuasiPoly> probes;
    probes.push_back(ground_state_u(M_abs, gamma));
    probes.push_back(QuasiPoly(M_abs + 1.0, gamma / (M_abs + 2.0),
                               {{0, 1.0}, {1, -0.4}, {2, 0.05}}));
    probes.push_back(QuasiPoly::term(M_abs + 2.3, 0.7 * gamma, 1.0));
    double factorization = 0.0;
    for (const QuasiPoly& f : probes) {
      factorization =
          std::max(factorization, factorization_residual(f, M_abs, gamma));
      factorization = std::max(
          factorization, factorization_residual(f, M_abs + 1.0, gamma));
    }
    add("factorization", factorization, 1e-10);

    const auto block = susy_block_algebra_check(M_abs, gamma, probes);
    add("block-algebra", block.max_residual, 1e-10);

    double eigen = 0.0;
    double intertwine = 0.0;
    bool injected = opts.inject_error;
    for (int nu = 0; nu < opts.max_n; ++nu) {
      for (int np = 0; nu + np < opts.max_n; ++np) {
        const auto qn = derive_quantum_numbers(params, opts.m, nu, np);
        QuasiPoly u = build_u(qn.N, qn.L, gamma);
        if (injected) {
          u = perturb_decay(u);
          injected = false;
        }
        const double energy = energy_internal(qn.N, gamma);
        eigen = std::max(eigen,
                         relative_coeff_distance(
                             apply_radial_hamiltonian(u, qn.L, gamma),
                             u.scaled(energy)));
        intertwine = std::max(
            intertwine,
            intertwining_residual(u, qn.L, gamma,
                                  energy + shift_const(qn.L, gamma)));
      }
    }
    add("eigen-residual", eigen, 1e-9);
    add("intertwining", intertwine, 1e-8);

    double ortho = 0.0;
    for (int np = 0; np < opts.max_n; ++np) {
      for (int np2 = 0; np2 < opts.max_n; ++np2) {
        const QuasiPoly a = build_u(M_abs + 1.0 + np, M_abs, gamma);
        const QuasiPoly b = build_u(M_abs + 1.0 + np2, M_abs, gamma);
        const double want = (np == np2) ? 1.0 : 0.0;
        ortho = std::max(ortho, std::fabs(inner_product(a, b) - want));
      }
    }
    add("orthonormality", ortho, 1e-10);

    const auto hyd = hydrogen_limit_check(gamma);
    add("hydrogen-limit", hyd.max_deviation, 1e-10);
  }

  if (numeric) {
    const double r_max = (opts.r_max > 0.0)
                             ? opts.r_max
                             : 30.0 * (M_abs + 3.0) / gamma;
    const RadialGrid grid(r_max, opts.grid_n);
    const double h = grid.h();

    double fd_eig = 0.0;
    double fd_tol = 1e-4;
    for (int j = 0; j <= 2; ++j) {
      const double L = M_abs + j;
      const double want = energy_internal(L + 1.0, gamma);
      const auto got = lowest_eigenvalues(discretize(L, gamma, grid), 1, 1e-8);
      fd_eig = std::max(fd_eig, std::fabs(got[0] - want));
      fd_tol = std::max(fd_tol, 5.0 * h * h * std::fabs(want));
    }
    add("fd-eigenvalue", fd_eig, fd_tol);

    const auto iso = verify_isospectrality(M_abs, gamma, grid, 3);
    const double iso_dev =
        *std::max_element(iso.deviations.begin(), iso.deviations.end());
    add("fd-isospectrality", iso.pass ? iso_dev : iso.tolerance * 2.0,
        iso.tolerance);

    // Ground-state eigenvector against analytic samples (grid-normalized).
    {
      const RadialGrid ev_grid(30.0 * (M_abs + 1.0) / gamma, opts.grid_n);
      const auto T = discretize(M_abs, gamma, ev_grid);
      const auto eig = lowest_eigenvalues(T, 1, 1e-8);
      const auto vec = eigenvector(T, eig[0]);
      const QuasiPoly u = ground_state_u(M_abs, gamma);
      double dev = 0.0;
      const double scale = 1.0 / std::sqrt(ev_grid.h());
      for (int i = 0; i < ev_grid.n; ++i) {
        dev = std::max(dev,
                       std::fabs(vec[i] * scale - u.evaluate(ev_grid.node(i))));
      }
      add("fd-eigenvector", dev, 1e-3);
    }

    // ODE route on its own grid so that h <= 1e-2.
    {
      const double ode_rmax = 30.0 * (M_abs + 1.0) / gamma;
      const int ode_n = std::max(opts.grid_n,
                                 static_cast<int>(std::ceil(ode_rmax / 5e-3)));
      const RadialGrid ode_grid(ode_rmax, ode_n);
      const auto psi = integrate_ground_state_ode(M_abs, gamma, ode_grid);
      const QuasiPoly u = ground_state_u(M_abs, gamma);
      double dev = 0.0;
      for (int i = 0; i < ode_grid.n; ++i) {
        dev = std::max(dev, std::fabs(psi[i] - u.evaluate(ode_grid.node(i))));
      }
      add("ode-ground-state", dev, 1e-6);
    }
  }

  report.pass = std::all_of(report.checks.begin(), report.checks.end(),
                            [](const ValidationCheck& c) { return c.pass; });
  return report;
}

} // namespace hartmann
