#include "hartmann/susy.hpp"

#include <cmath>

namespace hartmann {

namespace {
constexpr double kSqrtHalf = 0.70710678118654752440;

double rel_dev(double got, double want) {
  const double scale = std::max({std::fabs(got), std::fabs(want), 1.0});
  return std::fabs(got - want) / scale;
}
} // namespace

double Superpotential::value(double r) const {
  if (!(r > 0.0)) {
    throw DomainError("Superpotential::value: r must be positive");
  }
  return -(L + 1.0) / r + gamma / (L + 1.0);
}

double riccati_residual(const Superpotential& w) {
  const double Lp1 = w.L + 1.0;
  // W^2 = (L+1)^2/r^2 - 2 gamma/r + (gamma/(L+1))^2 ; W' = (L+1)/r^2
  const double w2_rm2 = Lp1 * Lp1;
  const double w2_rm1 = -2.0 * w.gamma;
  const double w2_r0 = (w.gamma / Lp1) * (w.gamma / Lp1);
  const double wp_rm2 = Lp1;

  // V1 = (W^2 - W')/2, expected {L(L+1)/2, -gamma, gamma^2/(2(L+1)^2)}
  double res = rel_dev(0.5 * (w2_rm2 - wp_rm2), 0.5 * w.L * Lp1);
  res = std::max(res, rel_dev(0.5 * w2_rm1, -w.gamma));
  res = std::max(res, rel_dev(0.5 * w2_r0, 0.5 * w.gamma * w.gamma / (Lp1 * Lp1)));
  // V2 = (W^2 + W')/2, expected {(L+1)(L+2)/2, -gamma, same constant}
  res = std::max(res, rel_dev(0.5 * (w2_rm2 + wp_rm2), 0.5 * Lp1 * (w.L + 2.0)));
  return res;
}

std::pair<RadialPotentialCoeffs, RadialPotentialCoeffs>
partner_potentials(const Superpotential& w) {
  if (riccati_residual(w) > 1e-12) {
    throw RiccatiMismatch("partner_potentials: Riccati expansion mismatch");
  }
  const double Lp1 = w.L + 1.0;
  const double shift = 0.5 * (w.gamma / Lp1) * (w.gamma / Lp1);
  RadialPotentialCoeffs v1{w.L * Lp1, w.gamma, shift};
  RadialPotentialCoeffs v2{Lp1 * (w.L + 2.0), w.gamma, shift};
  return {v1, v2};
}

QuasiPoly LadderOperator::apply(const QuasiPoly& f) const {
  if (f.is_zero()) {
    return f;
  }
  const double Lp1 = L + 1.0;
  // W_L f = -(L+1) r^{-1} f + (gamma/(L+1)) f, all within the algebra.
  const QuasiPoly wf = f.shifted_power(-1).scaled(-Lp1) + f.scaled(gamma / Lp1);
  const QuasiPoly df = f.derivative();
  const QuasiPoly inner =
      (sign == LadderSign::minus) ? (df + wf) : (wf - df);
  return inner.scaled(kSqrtHalf);
}

QuasiPoly ground_state_u(double L, double gamma) {
  if (!(L > -1.5)) {
    throw DomainError("ground_state_u: L must exceed -3/2");
  }
  if (!(gamma > 0.0)) {
    throw DomainError("ground_state_u: gamma must be positive");
  }
  const double kappa = gamma / (L + 1.0);
  const double norm = std::pow(2.0 * kappa, L + 1.5) / std::sqrt(gamma_real(2.0 * L + 3.0));
  return QuasiPoly::term(L + 1.0, kappa, norm);
}

double annihilation_residual(double L, double gamma) {
  const LadderOperator lower{LadderSign::minus, L, gamma};
  return lower.apply(ground_state_u(L, gamma)).max_abs_coeff();
}

double energy_internal(double N, double gamma) {
  if (!(N >= 1.0) || !(gamma > 0.0)) {
    throw DomainError("energy_internal: need N >= 1 and gamma > 0");
  }
  return -gamma * gamma / (2.0 * N * N);
}

QuasiPoly build_u(double N, double L, double gamma) {
  const double nprime = N - L - 1.0;
  const double rounded = std::round(nprime);
  if (rounded < -0.5 || std::fabs(nprime - rounded) > 1e-9) {
    throw InvalidQuantumNumbers("build_u: N - L - 1 must be a non-negative integer");
  }
  const int steps = static_cast<int>(rounded);
  QuasiPoly u = ground_state_u(N - 1.0, gamma);
  for (int j = 1; j <= steps; ++j) {
    const LadderOperator raise{LadderSign::plus, N - 1.0 - j, gamma};
    u = raise.apply(u);
  }
  return normalized(u);
}

QuasiPoly radial_R(const QuasiPoly& u) {
  if (u.alpha() < 1.0 - 1e-9) {
    throw DomainError("radial_R: u must vanish at least linearly at r = 0");
  }
  return u.shifted_power(-1);
}

double factorization_residual(const QuasiPoly& f, double L, double gamma) {
  const LadderOperator lower{LadderSign::minus, L, gamma};
  const LadderOperator raise{LadderSign::plus, L, gamma};
  const QuasiPoly lhs = raise.apply(lower.apply(f));
  const double shift = 0.5 * (gamma / (L + 1.0)) * (gamma / (L + 1.0));
  const QuasiPoly rhs = apply_radial_hamiltonian(f, L, gamma) + f.scaled(shift);
  return relative_coeff_distance(lhs, rhs);
}

double intertwining_residual(const QuasiPoly& f, double L, double gamma,
                             double eps) {
  const LadderOperator lower{LadderSign::minus, L, gamma};
  const QuasiPoly g = lower.apply(f);
  if (g.is_zero()) {
    return 0.0;
  }
  const double shift = 0.5 * (gamma / (L + 1.0)) * (gamma / (L + 1.0));
  const QuasiPoly lhs = apply_radial_hamiltonian(g, L + 1.0, gamma) + g.scaled(shift);
  return relative_coeff_distance(lhs, g.scaled(eps));
}

BlockAlgebraReport susy_block_algebra_check(double L, double gamma,
                                            const std::vector<QuasiPoly>& probes) {
  const LadderOperator lower{LadderSign::minus, L, gamma};
  const LadderOperator raise{LadderSign::plus, L, gamma};
  const double shift = 0.5 * (gamma / (L + 1.0)) * (gamma / (L + 1.0));

  BlockAlgebraReport report{};
  report.max_residual = 0.0;
  for (const QuasiPoly& p : probes) {
    BlockAlgebraProbe entry{};
    // Q(f, g) = (0, A- f); applying Q again feeds the zero component into A-.
    entry.q_squared_zero = lower.apply(QuasiPoly()).is_zero();

    const QuasiPoly h1 = raise.apply(lower.apply(p));
    const QuasiPoly want1 = apply_radial_hamiltonian(p, L, gamma) + p.scaled(shift);
    entry.h1_residual = relative_coeff_distance(h1, want1);

    const QuasiPoly h2 = lower.apply(raise.apply(p));
    const QuasiPoly want2 = apply_radial_hamiltonian(p, L + 1.0, gamma) + p.scaled(shift);
    entry.h2_residual = relative_coeff_distance(h2, want2);

    report.max_residual = std::max({report.max_residual, entry.h1_residual,
                                    entry.h2_residual,
                                    entry.q_squared_zero ? 0.0 : 1.0});
    report.probes.push_back(entry);
  }
  report.pass = report.max_residual <= 1e-10;
  return report;
}

} // namespace hartmann
