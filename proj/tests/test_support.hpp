#pragma once

#include <cmath>
#include <functional>

#include "hartmann/quasipoly.hpp"

namespace test_support {

// Adaptive Simpson quadrature; independent of the Gamma-integral path.
inline double adaptive_simpson(const std::function<double(double)>& f, double a,
                               double b, double tol, int depth = 0) {
  const double m = 0.5 * (a + b);
  const double fa = f(a), fb = f(b), fm = f(m);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double left = (m - a) / 6.0 * (fa + 4.0 * f(lm) + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * f(rm) + fb);
  const double both = left + right;
  if (depth > 40 || std::fabs(both - whole) < 15.0 * tol) {
    return both + (both - whole) / 15.0;
  }
  return adaptive_simpson(f, a, m, 0.5 * tol, depth + 1) +
         adaptive_simpson(f, m, b, 0.5 * tol, depth + 1);
}

inline double quad_inner_product(const hartmann::QuasiPoly& f,
                                 const hartmann::QuasiPoly& g, double tol) {
  const double kmin = std::min(f.kappa(), g.kappa());
  const auto fg = [&](double r) {
    return r > 0.0 ? f.evaluate(r) * g.evaluate(r) : 0.0;
  };
  // Seed with one panel per decay length so the error estimator cannot be
  // fooled by three near-zero samples on a mostly-empty interval.
  double total = 0.0;
  for (int k = 0; k < 40; ++k) {
    total += adaptive_simpson(fg, k / kmin, (k + 1) / kmin, tol / 40.0);
  }
  return total;
}

// Distance between the directions of two quasi-polynomials, ignoring
// overall scale and sign.
inline double collinearity_distance(const hartmann::QuasiPoly& a,
                                    const hartmann::QuasiPoly& b) {
  using hartmann::normalized;
  return hartmann::relative_coeff_distance(normalized(a), normalized(b));
}

} // namespace test_support
