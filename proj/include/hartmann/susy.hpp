#pragma once

#include <utility>
#include <vector>

#include "hartmann/quasipoly.hpp"

namespace hartmann {

/// W_L(r) = -(L+1)/r + gamma/(L+1); generates the ladder pair for the
/// radial Coulomb-like problem at angular separation constant L.
struct Superpotential {
  double L;
  double gamma;

  double kappa() const { return gamma / (L + 1.0); }
  double value(double r) const;
};

/// V(r) = centrifugal/(2 r^2) - coulomb/r + constant.
struct RadialPotentialCoeffs {
  double centrifugal;
  double coulomb;
  double constant;
};

/// Largest relative deviation between 1/2 (W^2 -+ W') expanded over
/// {r^-2, r^-1, r^0} and the closed-form partner coefficients.
double riccati_residual(const Superpotential& w);

/// Partner pair (V1, V2) from the Riccati relations V_{1,2} = (W^2 -+ W')/2.
/// Throws RiccatiMismatch if the internal expansion disagrees with the
/// closed forms beyond 1e-12 relative.
std::pair<RadialPotentialCoeffs, RadialPotentialCoeffs>
partner_potentials(const Superpotential& w);

enum class LadderSign { plus, minus };

/// A+-_L = (1/sqrt2)(-+ d/dr + W_L), acting exactly on quasi-polynomials.
struct LadderOperator {
  LadderSign sign;
  double L;
  double gamma;

  QuasiPoly apply(const QuasiPoly& f) const;
};

/// Normalized nodeless state of H_L: N_L r^(L+1) exp(-kappa_L r).
QuasiPoly ground_state_u(double L, double gamma);

/// max |coefficient| of A-_L applied to the normalized ground state.
double annihilation_residual(double L, double gamma);

/// E_N = -gamma^2 / (2 N^2) in internal units.
double energy_internal(double N, double gamma);

/// Raising chain: start at the nodeless state of H_{N-1} and apply
/// A+_{L'} for L' = N-2, ..., L; normalize once at the end with a
/// positive coefficient at the lowest power.
QuasiPoly build_u(double N, double L, double gamma);

/// R = u / r.
QuasiPoly radial_R(const QuasiPoly& u);

/// Relative deviation of A+_L A-_L f from (H_L + gamma^2/(2(L+1)^2)) f.
double factorization_residual(const QuasiPoly& f, double L, double gamma);

/// Relative deviation of (H_{L+1} + gamma^2/(2(L+1)^2)) (A-_L f) from
/// eps (A-_L f), for f an eigenfunction of the shifted H_L at eps.
double intertwining_residual(const QuasiPoly& f, double L, double gamma,
                             double eps);

struct BlockAlgebraProbe {
  bool q_squared_zero;
  double h1_residual; // A+A- f  vs shifted H_L f
  double h2_residual; // A-A+ g  vs shifted H_{L+1} g
};

struct BlockAlgebraReport {
  std::vector<BlockAlgebraProbe> probes;
  double max_residual;
  bool pass;
};

/// Checks the block realization: Q^2 = 0 on probe pairs and
/// {Q, Q+} block-diagonal with H1 = A+A-, H2 = A-A+.
BlockAlgebraReport susy_block_algebra_check(double L, double gamma,
                                            const std::vector<QuasiPoly>& probes);

} // namespace hartmann
