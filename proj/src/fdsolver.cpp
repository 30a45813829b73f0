#include "hartmann/fdsolver.hpp"

#include <algorithm>
#include <cmath>

namespace hartmann {

namespace {
constexpr double kPivotFloor = 1e-300;
} // namespace

RadialGrid::RadialGrid(double r_max_, int n_) : r_max(r_max_), n(n_) {
  if (!(r_max > 0.0) || n < 1) {
    throw DomainError("RadialGrid: need r_max > 0 and n >= 1");
  }
}

TridiagonalOperator discretize(double L, double gamma, const RadialGrid& grid) {
  if (!(L > -1.0)) {
    throw DomainError("discretize: L must exceed -1");
  }
  if (gamma < 0.0) {
    throw DomainError("discretize: gamma must be non-negative");
  }
  const double h = grid.h();
  const double inv_h2 = 1.0 / (h * h);
  TridiagonalOperator T;
  T.diag.resize(grid.n);
  T.offdiag.assign(grid.n - 1, -0.5 * inv_h2);
  for (int i = 0; i < grid.n; ++i) {
    const double r = grid.node(i);
    T.diag[i] = inv_h2 + 0.5 * L * (L + 1.0) / (r * r) - gamma / r;
  }
  return T;
}

int sturm_count(const TridiagonalOperator& T, double lambda) {
  int count = 0;
  double pivot = 1.0;
  for (int i = 0; i < T.size(); ++i) {
    const double off2 = (i > 0) ? T.offdiag[i - 1] * T.offdiag[i - 1] : 0.0;
    pivot = T.diag[i] - lambda - off2 / pivot;
    if (std::fabs(pivot) < kPivotFloor) {
      pivot = (pivot < 0.0) ? -kPivotFloor : kPivotFloor;
    }
    if (pivot < 0.0) {
      ++count;
    }
  }
  return count;
}

std::vector<double> lowest_eigenvalues(const TridiagonalOperator& T, int k,
                                       double tol) {
  const int n = T.size();
  if (k < 1 || k > n || !(tol > 0.0)) {
    throw DomainError("lowest_eigenvalues: need 1 <= k <= n and tol > 0");
  }
  double glo = T.diag[0];
  double ghi = T.diag[0];
  for (int i = 0; i < n; ++i) {
    double radius = 0.0;
    if (i > 0) {
      radius += std::fabs(T.offdiag[i - 1]);
    }
    if (i < n - 1) {
      radius += std::fabs(T.offdiag[i]);
    }
    glo = std::min(glo, T.diag[i] - radius);
    ghi = std::max(ghi, T.diag[i] + radius);
  }
  if (!std::isfinite(glo) || !std::isfinite(ghi)) {
    throw ConvergenceFailure("lowest_eigenvalues: non-finite matrix entries");
  }

  std::vector<double> out;
  out.reserve(k);
  double lo_floor = glo;
  for (int j = 1; j <= k; ++j) {
    double lo = lo_floor;
    double hi = ghi;
    int iters = 0;
    while (hi - lo > tol) {
      if (++iters > 200) {
        throw ConvergenceFailure("lowest_eigenvalues: bisection stalled");
      }
      const double mid = 0.5 * (lo + hi);
      if (sturm_count(T, mid) >= j) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    out.push_back(0.5 * (lo + hi));
    lo_floor = lo; // the (j+1)-th eigenvalue cannot lie below this bracket
  }
  return out;
}

namespace {

// Solves (T - lambda I) x = b by tridiagonal LU with partial pivoting.
std::vector<double> shifted_solve(const TridiagonalOperator& T, double lambda,
                                  std::vector<double> b) {
  const int n = T.size();
  std::vector<double> d(n), e(n - 1 > 0 ? n - 1 : 0), f(n > 2 ? n - 2 : 0, 0.0);
  std::vector<double> sub(n - 1 > 0 ? n - 1 : 0);
  for (int i = 0; i < n; ++i) {
    d[i] = T.diag[i] - lambda;
  }
  for (int i = 0; i + 1 < n; ++i) {
    e[i] = T.offdiag[i];
    sub[i] = T.offdiag[i];
  }
  for (int i = 0; i + 1 < n; ++i) {
    if (std::fabs(sub[i]) > std::fabs(d[i])) {
      std::swap(d[i], sub[i]);
      const double t_e = e[i];
      e[i] = d[i + 1];
      d[i + 1] = t_e;
      if (i + 2 < n) {
        f[i] = e[i + 1];
        e[i + 1] = 0.0;
      }
      std::swap(b[i], b[i + 1]);
    }
    if (d[i] == 0.0) {
      d[i] = kPivotFloor;
    }
    const double mult = sub[i] / d[i];
    d[i + 1] -= mult * e[i];
    if (i + 2 < n) {
      e[i + 1] -= mult * f[i];
    }
    b[i + 1] -= mult * b[i];
  }
  if (d[n - 1] == 0.0) {
    d[n - 1] = kPivotFloor;
  }
  std::vector<double> x(n);
  for (int i = n - 1; i >= 0; --i) {
    double rhs = b[i];
    if (i + 1 < n) {
      rhs -= e[i] * x[i + 1];
    }
    if (i + 2 < n) {
      rhs -= f[i] * x[i + 2];
    }
    x[i] = rhs / d[i];
  }
  return x;
}

void normalize_euclidean(std::vector<double>& v) {
  // pre-scale by the largest entry so the sum of squares cannot overflow
  // (inverse iteration at a near-exact shift produces entries ~1/pivot)
  double m = 0.0;
  for (double x : v) {
    m = std::max(m, std::fabs(x));
  }
  if (m == 0.0) {
    return;
  }
  double s = 0.0;
  for (double x : v) {
    const double t = x / m;
    s += t * t;
  }
  s = m * std::sqrt(s);
  for (double& x : v) {
    x /= s;
  }
}

void fix_sign(std::vector<double>& v) {
  double max_abs = 0.0;
  for (double x : v) {
    max_abs = std::max(max_abs, std::fabs(x));
  }
  for (double x : v) {
    if (std::fabs(x) > 1e-8 * max_abs) {
      if (x < 0.0) {
        for (double& y : v) {
          y = -y;
        }
      }
      return;
    }
  }
}

} // namespace

double eigen_residual(const TridiagonalOperator& T, double lambda,
                      const std::vector<double>& u) {
  const int n = T.size();
  double num = 0.0;
  double den = 0.0;
  for (int i = 0; i < n; ++i) {
    double tu = T.diag[i] * u[i];
    if (i > 0) {
      tu += T.offdiag[i - 1] * u[i - 1];
    }
    if (i + 1 < n) {
      tu += T.offdiag[i] * u[i + 1];
    }
    const double r = tu - lambda * u[i];
    num += r * r;
    den += u[i] * u[i];
  }
  return std::sqrt(num / den);
}

std::vector<double> eigenvector(const TridiagonalOperator& T, double lambda) {
  const int n = T.size();
  std::vector<double> v(n, 1.0);
  normalize_euclidean(v);
  for (int iter = 0; iter < 20; ++iter) {
    v = shifted_solve(T, lambda, std::move(v));
    normalize_euclidean(v);
    if (iter >= 2 && eigen_residual(T, lambda, v) <= 1e-6) {
      fix_sign(v);
      return v;
    }
  }
  if (eigen_residual(T, lambda, v) <= 1e-6) {
    fix_sign(v);
    return v;
  }
  throw ConvergenceFailure("eigenvector: inverse iteration did not converge");
}

IsospectralityReport verify_isospectrality(double L, double gamma,
                                           const RadialGrid& grid, int k) {
  if (k < 2) {
    throw DomainError("verify_isospectrality: need k >= 2");
  }
  const double bis_tol = 1e-9;
  IsospectralityReport report{};
  report.lower_spectrum =
      lowest_eigenvalues(discretize(L, gamma, grid), k, bis_tol);
  report.upper_spectrum =
      lowest_eigenvalues(discretize(L + 1.0, gamma, grid), k - 1, bis_tol);
  const double h = grid.h();
  report.tolerance = 0.0;
  bool ok = true;
  for (int i = 0; i + 1 < k; ++i) {
    const double a = report.lower_spectrum[i + 1];
    const double b = report.upper_spectrum[i];
    const double tol = std::max(1e-4, 5.0 * h * h * std::fabs(a));
    report.tolerance = std::max(report.tolerance, tol);
    report.deviations.push_back(std::fabs(a - b));
    ok = ok && (report.deviations.back() <= tol);
  }
  report.extra_ground_state =
      (report.upper_spectrum[0] - report.lower_spectrum[0]) > report.tolerance;
  report.pass = ok && report.extra_ground_state;
  return report;
}

std::vector<double> integrate_ground_state_ode(double L, double gamma,
                                               const RadialGrid& grid) {
  if (!(L > -1.5)) {
    throw DomainError("integrate_ground_state_ode: L must exceed -3/2");
  }
  const double kappa = gamma / (L + 1.0);
  const auto rhs = [&](double r, double u) {
    return ((L + 1.0) / r - kappa) * u;
  };
  const double h = grid.h();
  std::vector<double> u(grid.n);
  double r = grid.node(0);
  double psi = std::pow(r, L + 1.0);
  u[0] = psi;
  for (int i = 1; i < grid.n; ++i) {
    // Substep so the RK4 step stays small against the 1/r coefficient.
    const int m =
        std::clamp(static_cast<int>(std::ceil(32.0 * h / r)), 1, 1024);
    const double s = h / m;
    for (int j = 0; j < m; ++j) {
      const double k1 = rhs(r, psi);
      const double k2 = rhs(r + 0.5 * s, psi + 0.5 * s * k1);
      const double k3 = rhs(r + 0.5 * s, psi + 0.5 * s * k2);
      const double k4 = rhs(r + s, psi + s * k3);
      psi += (s / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
      r += s;
    }
    r = grid.node(i); // resync against substep rounding
    u[i] = psi;
  }
  // Composite Simpson over [0, n h] including u(0) = 0.
  double integral = 0.0;
  const auto sq = [&](int idx) { return idx < 0 ? 0.0 : u[idx] * u[idx]; };
  int i = 0;
  for (; i + 2 <= grid.n; i += 2) {
    integral += (h / 3.0) * (sq(i - 1) + 4.0 * sq(i) + sq(i + 1));
  }
  if (i < grid.n) {
    integral += 0.5 * h * (sq(i - 1) + sq(i)); // odd remainder, tiny tail
  }
  const double scale = 1.0 / std::sqrt(integral);
  for (double& x : u) {
    x *= scale;
  }
  return u;
}

} // namespace hartmann
