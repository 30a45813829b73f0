#pragma once

#include <map>

#include "hartmann/errors.hpp"

namespace hartmann {

/// Exact closed algebra for radial functions of the form
///   f(r) = sum_k c_k r^(alpha+k) exp(-kappa r),   kappa > 0,
/// closed under differentiation, multiplication by integer powers of r,
/// and the radial Hamiltonian. Immutable after construction; canonical
/// form keeps the lowest stored offset at zero and drops coefficients
/// below 1e-14 of the largest magnitude.
class QuasiPoly {
 public:
  /// Zero function (empty coefficient map); kappa kept for compatibility checks.
  QuasiPoly() = default;

  QuasiPoly(double alpha, double kappa, std::map<int, double> coeffs);

  /// Single term c * r^alpha * exp(-kappa r).
  static QuasiPoly term(double alpha, double kappa, double c = 1.0);

  double alpha() const { return alpha_; }
  double kappa() const { return kappa_; }
  const std::map<int, double>& coeffs() const { return coeffs_; }

  bool is_zero() const { return coeffs_.empty(); }
  int degree_span() const; // number of stored terms; 0 for the zero function
  double max_abs_coeff() const;

  double evaluate(double r) const;

  QuasiPoly scaled(double c) const;
  QuasiPoly shifted_power(int p) const; // multiply by r^p
  QuasiPoly derivative() const;

 private:
  void canonicalize();

  double alpha_ = 0.0;
  double kappa_ = 1.0;
  std::map<int, double> coeffs_;
};

QuasiPoly operator+(const QuasiPoly& f, const QuasiPoly& g);
QuasiPoly operator-(const QuasiPoly& f, const QuasiPoly& g);
QuasiPoly operator*(double c, const QuasiPoly& f);

/// -1/2 f'' + [L(L+1)/(2 r^2)] f - (gamma/r) f.
QuasiPoly apply_radial_hamiltonian(const QuasiPoly& f, double L, double gamma);

/// int_0^inf f g dr, evaluated term-wise through Gamma integrals.
double inner_product(const QuasiPoly& f, const QuasiPoly& g);

/// Gamma function on the positive real axis, relative error <= 1e-12.
double gamma_real(double x);

/// max |coeff| of (a - b) divided by the larger max |coeff| of a, b.
/// Zero when both are zero.
double relative_coeff_distance(const QuasiPoly& a, const QuasiPoly& b);

/// Rescale to unit norm with a positive coefficient at the lowest power.
QuasiPoly normalized(const QuasiPoly& f);

} // namespace hartmann
