#pragma once

#include <string>
#include <vector>

#include "hartmann/model.hpp"

namespace hartmann {

enum class ValidationSuite { algebra, numeric, all };

struct ValidationCheck {
  std::string name;
  double residual;
  double tolerance;
  bool pass;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;
  bool pass;
};

struct ValidationOptions {
  double eta = 1.0;
  double sigma = 1.0;
  int m = 0;
  int max_n = 4;     // chain states up to N = |M| + max_n
  int grid_n = 6000; // FD grid points (numeric suite)
  double r_max = 0.0; // 0 = choose from the decay length
  ValidationSuite suite = ValidationSuite::all;
  bool inject_error = false; // self-test: flip one coefficient, must fail
};

/// Runs the algebraic (Riccati, annihilation, factorization, intertwining,
/// eigen-residual, orthonormality, block algebra) and numeric (FD
/// isospectrality, FD vs analytic eigenpairs, ODE ground state) suites.
ValidationReport run_validation(const ValidationOptions& opts);

} // namespace hartmann
