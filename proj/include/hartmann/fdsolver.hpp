#pragma once

#include <vector>

#include "hartmann/errors.hpp"

namespace hartmann {

/// Uniform radial grid with Dirichlet ends: interior nodes r_i = i h,
/// i = 1..n, h = r_max/(n+1).
struct RadialGrid {
  double r_max;
  int n;

  RadialGrid(double r_max_, int n_);

  double h() const { return r_max / (n + 1); }
  double node(int i) const { return (i + 1) * h(); } // i = 0..n-1
};

/// Symmetric tridiagonal finite-difference matrix of H_L.
struct TridiagonalOperator {
  std::vector<double> diag;
  std::vector<double> offdiag; // size n-1

  int size() const { return static_cast<int>(diag.size()); }
};

/// Second-order central-difference discretization:
/// diag_i = 1/h^2 + L(L+1)/(2 r_i^2) - gamma/r_i, offdiag = -1/(2 h^2).
TridiagonalOperator discretize(double L, double gamma, const RadialGrid& grid);

/// Number of eigenvalues strictly below lambda (LDL^T pivot sign count).
int sturm_count(const TridiagonalOperator& T, double lambda);

/// k smallest eigenvalues, each bracketed to width <= tol, ascending.
std::vector<double> lowest_eigenvalues(const TridiagonalOperator& T, int k,
                                       double tol);

/// Inverse iteration at shift lambda; unit grid norm h-free (euclidean),
/// sign fixed by the first significant component.
std::vector<double> eigenvector(const TridiagonalOperator& T, double lambda);

/// ||T u - lambda u||_2 / ||u||_2.
double eigen_residual(const TridiagonalOperator& T, double lambda,
                      const std::vector<double>& u);

struct IsospectralityReport {
  std::vector<double> lower_spectrum; // k levels of H_L
  std::vector<double> upper_spectrum; // k-1 levels of H_{L+1}
  std::vector<double> deviations;     // shared-level mismatches
  double tolerance;
  bool extra_ground_state; // H_L has one state below everything in H_{L+1}
  bool pass;
};

/// Checks that spectrum(H_L) minus its ground state matches spectrum(H_{L+1}).
IsospectralityReport verify_isospectrality(double L, double gamma,
                                           const RadialGrid& grid, int k);

/// Integrates u' = [(L+1)/r - gamma/(L+1)] u from r = h with u(h) = h^(L+1)
/// by RK4 (substepped near the origin) and normalizes on the grid.
std::vector<double> integrate_ground_state_ode(double L, double gamma,
                                               const RadialGrid& grid);

} // namespace hartmann
