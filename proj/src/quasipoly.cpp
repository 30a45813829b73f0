#include "hartmann/quasipoly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace hartmann {

namespace {
constexpr double kTrimRel = 1e-14;
constexpr double kMatchTol = 1e-12;
} // namespace

QuasiPoly::QuasiPoly(double alpha, double kappa, std::map<int, double> coeffs)
    : alpha_(alpha), kappa_(kappa), coeffs_(std::move(coeffs)) {
  if (!(kappa_ > 0.0) || !std::isfinite(kappa_)) {
    throw DomainError("QuasiPoly: decay rate kappa must be positive and finite");
  }
  if (!std::isfinite(alpha_)) {
    throw DomainError("QuasiPoly: base exponent must be finite");
  }
  canonicalize();
}

QuasiPoly QuasiPoly::term(double alpha, double kappa, double c) {
  return QuasiPoly(alpha, kappa, {{0, c}});
}

void QuasiPoly::canonicalize() {
  double max_abs = 0.0;
  for (const auto& [k, c] : coeffs_) {
    if (!std::isfinite(c)) {
      throw DomainError("QuasiPoly: non-finite coefficient");
    }
    max_abs = std::max(max_abs, std::fabs(c));
  }
  for (auto it = coeffs_.begin(); it != coeffs_.end();) {
    if (std::fabs(it->second) <= kTrimRel * max_abs) {
      it = coeffs_.erase(it);
    } else {
      ++it;
    }
  }
  if (coeffs_.empty()) {
    return;
  }
  // Rebase so the lowest stored offset is zero.
  const int lo = coeffs_.begin()->first;
  if (lo != 0) {
    std::map<int, double> rebased;
    for (const auto& [k, c] : coeffs_) {
      rebased.emplace(k - lo, c);
    }
    coeffs_ = std::move(rebased);
    alpha_ += lo;
  }
}

int QuasiPoly::degree_span() const { return static_cast<int>(coeffs_.size()); }

double QuasiPoly::max_abs_coeff() const {
  double m = 0.0;
  for (const auto& [k, c] : coeffs_) {
    m = std::max(m, std::fabs(c));
  }
  return m;
}

double QuasiPoly::evaluate(double r) const {
  if (r < 0.0) {
    throw DomainError("QuasiPoly::evaluate: r must be non-negative");
  }
  if (is_zero()) {
    return 0.0;
  }
  if (r == 0.0) {
    if (alpha_ < 0.0) {
      throw DomainError("QuasiPoly::evaluate: divergent at r = 0");
    }
    return alpha_ == 0.0 ? coeffs_.begin()->second * 1.0 : 0.0;
  }
  // Horner over the integer offsets, then one power and one exponential.
  double poly = 0.0;
  int prev = coeffs_.rbegin()->first;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    poly *= std::pow(r, prev - it->first);
    poly += it->second;
    prev = it->first;
  }
  return poly * std::pow(r, alpha_ + prev) * std::exp(-kappa_ * r);
}

QuasiPoly QuasiPoly::scaled(double c) const {
  if (c == 0.0 || is_zero()) {
    return QuasiPoly();
  }
  std::map<int, double> out;
  for (const auto& [k, v] : coeffs_) {
    out.emplace(k, c * v);
  }
  return QuasiPoly(alpha_, kappa_, std::move(out));
}

QuasiPoly QuasiPoly::shifted_power(int p) const {
  if (is_zero()) {
    return *this;
  }
  return QuasiPoly(alpha_ + p, kappa_, coeffs_);
}

QuasiPoly QuasiPoly::derivative() const {
  if (is_zero()) {
    return *this;
  }
  // (c r^b e^{-kr})' = c b r^{b-1} e^{-kr} - c k r^b e^{-kr}; base drops to alpha-1.
  std::map<int, double> out;
  for (const auto& [k, c] : coeffs_) {
    out[k] += c * (alpha_ + k);
    out[k + 1] += -c * kappa_;
  }
  return QuasiPoly(alpha_ - 1.0, kappa_, std::move(out));
}

QuasiPoly operator+(const QuasiPoly& f, const QuasiPoly& g) {
  if (f.is_zero()) {
    return g;
  }
  if (g.is_zero()) {
    return f;
  }
  const double kmax = std::max(f.kappa(), g.kappa());
  if (std::fabs(f.kappa() - g.kappa()) > kMatchTol * kmax) {
    throw IncompatibleDecay("QuasiPoly add: decay rates differ");
  }
  const double d = f.alpha() - g.alpha();
  const double dr = std::round(d);
  if (std::fabs(d - dr) > kMatchTol * (1.0 + std::fabs(d))) {
    throw IncompatibleExponent("QuasiPoly add: base exponents differ by a non-integer");
  }
  const int shift = static_cast<int>(dr);
  std::map<int, double> out;
  for (const auto& [k, c] : f.coeffs()) {
    out[k + shift] += c;
  }
  for (const auto& [k, c] : g.coeffs()) {
    out[k] += c;
  }
  return QuasiPoly(g.alpha(), f.kappa(), std::move(out));
}

QuasiPoly operator-(const QuasiPoly& f, const QuasiPoly& g) {
  return f + g.scaled(-1.0);
}

QuasiPoly operator*(double c, const QuasiPoly& f) { return f.scaled(c); }

QuasiPoly apply_radial_hamiltonian(const QuasiPoly& f, double L, double gamma) {
  if (!(gamma > 0.0)) {
    throw DomainError("apply_radial_hamiltonian: gamma must be positive");
  }
  if (!(L > -1.0)) {
    throw DomainError("apply_radial_hamiltonian: L must exceed -1");
  }
  const QuasiPoly kinetic = f.derivative().derivative().scaled(-0.5);
  const QuasiPoly centrifugal = f.shifted_power(-2).scaled(0.5 * L * (L + 1.0));
  const QuasiPoly coulomb = f.shifted_power(-1).scaled(-gamma);
  return kinetic + centrifugal + coulomb;
}

double gamma_real(double x) {
  if (!(x > 0.0)) {
    throw DomainError("gamma_real: argument must be positive");
  }
  return std::tgamma(x);
}

double inner_product(const QuasiPoly& f, const QuasiPoly& g) {
  if (f.is_zero() || g.is_zero()) {
    return 0.0;
  }
  const double ksum = f.kappa() + g.kappa();
  double total = 0.0;
  for (const auto& [kf, cf] : f.coeffs()) {
    for (const auto& [kg, cg] : g.coeffs()) {
      const double beta = f.alpha() + g.alpha() + kf + kg;
      if (beta <= -1.0) {
        throw DivergentIntegral("inner_product: combined power not integrable at 0");
      }
      // int_0^inf r^beta e^{-ksum r} dr = Gamma(beta+1) / ksum^(beta+1)
      total += cf * cg * gamma_real(beta + 1.0) / std::pow(ksum, beta + 1.0);
    }
  }
  return total;
}

double relative_coeff_distance(const QuasiPoly& a, const QuasiPoly& b) {
  const double scale = std::max(a.max_abs_coeff(), b.max_abs_coeff());
  if (scale == 0.0) {
    return 0.0;
  }
  return (a - b).max_abs_coeff() / scale;
}

QuasiPoly normalized(const QuasiPoly& f) {
  if (f.is_zero()) {
    throw DomainError("normalized: zero function");
  }
  double c = 1.0 / std::sqrt(inner_product(f, f));
  if (f.coeffs().begin()->second < 0.0) {
    c = -c;
  }
  return f.scaled(c);
}

} // namespace hartmann
