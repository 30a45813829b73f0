#pragma once

#include <vector>

#include "hartmann/quasipoly.hpp"

namespace hartmann {

/// Ring-shaped potential strengths; both dimensionless, typically 1..10.
struct HartmannParams {
  double eta;
  double sigma;

  HartmannParams(double eta_, double sigma_);

  /// Coulomb strength in internal units (hbar = mu = e = 1).
  double gamma() const { return eta * sigma * sigma; }
};

struct UnitSystem {
  double mu = 1.0;   // particle mass
  double e_sq = 1.0; // squared charge
  double hbar = 1.0;

  double a0() const { return hbar * hbar / (mu * e_sq); }
  double eps0() const { return -0.5 * mu * e_sq * e_sq / (hbar * hbar); }
};

/// (m, nu', n') plus the derived labels |M| = sqrt(m^2 + eta^2 sigma^2),
/// L = nu' + |M|, N = L + 1 + n'. L and N are generically irrational.
struct QuantumNumbers {
  int m;
  int nu_prime;
  int n_prime;
  double M_abs;
  double L;
  double N;
};

QuantumNumbers derive_quantum_numbers(const HartmannParams& p, int m,
                                      int nu_prime, int n_prime);

/// V(r, theta) = eta sigma^2 eps0 (2 a0/r - eta a0^2/(r^2 sin^2 theta)).
double potential_value(const HartmannParams& p, const UnitSystem& units,
                       double r, double theta);

struct SpectrumEntry {
  QuantumNumbers qn;
  double energy_internal;  // -gamma^2/(2 N^2)
  double energy_physical;  // -Lambda/N^2, Lambda = eta^2 sigma^4 |eps0|
  double energy_over_eps0; // -eta^2 sigma^4/N^2, unit-system independent
  double lambda;
};

/// All states with m in [m_min, m_max] and nu' + n' <= max_excitation,
/// sorted by energy, ties broken by (|m|, nu', n', m).
std::vector<SpectrumEntry> spectrum(const HartmannParams& p,
                                    const UnitSystem& units, int m_min,
                                    int m_max, int max_excitation);

/// Count of L values sharing energy -Lambda/N^2 at this m: N - |M|.
int degeneracy_at_level(const HartmannParams& p, int m, double N);

/// Normalized R_{N,L} (internal units, lengths in a0) for the given state.
QuasiPoly radial_wavefunction(const HartmannParams& p, const UnitSystem& units,
                              const QuantumNumbers& qn);

struct HydrogenLimitEntry {
  int N;
  int L;
  double deviation;
};

struct HydrogenLimitReport {
  std::vector<HydrogenLimitEntry> entries;
  double max_deviation;
  bool pass;
};

/// Integer-L sanity check against textbook hydrogen radial functions
/// generated by an independent Laguerre recurrence.
HydrogenLimitReport hydrogen_limit_check(double gamma);

/// Independent oracle: normalized hydrogen-like R_{N,L} for Coulomb
/// strength gamma, built from the generalized Laguerre recurrence.
QuasiPoly hydrogen_radial_reference(int N, int L, double gamma);

} // namespace hartmann
