// Command-line front end: spectra, wavefunctions, potential sampling and
// the validation suites, emitted as deterministic JSON or CSV.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hartmann/fdsolver.hpp"
#include "hartmann/model.hpp"
#include "hartmann/serialize.hpp"
#include "hartmann/susy.hpp"
#include "hartmann/validation.hpp"

namespace {

using nlohmann::json;
using namespace hartmann;

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

json make_doc(const std::string& command, json params, json results,
              bool meta) {
  json doc;
  doc["command"] = command;
  doc["params"] = std::move(params);
  doc["results"] = std::move(results);
  if (meta) {
    doc["meta"] = {{"tool", "hartmann-cli"}, {"version", "0.1.0"}};
  }
  return doc;
}

void print_csv_header(const std::string& command, bool meta,
                      const std::string& header) {
  if (meta) {
    std::cout << "# hartmann-cli 0.1.0 " << command << "\n";
  }
  std::cout << header << "\n";
}

int cmd_spectrum(double eta, double sigma, int m_min, int m_max,
                 int max_excitation, const std::string& units,
                 const std::string& format, bool meta) {
  const HartmannParams p(eta, sigma);
  const UnitSystem u;
  const auto entries = spectrum(p, u, m_min, m_max, max_excitation);
  if (format == "csv") {
    print_csv_header("spectrum", meta,
                     "m,nu_prime,n_prime,M_abs,L,N,E_internal,E_over_eps0");
    for (const auto& e : entries) {
      std::cout << e.qn.m << ',' << e.qn.nu_prime << ',' << e.qn.n_prime << ','
                << fmt17(e.qn.M_abs) << ',' << fmt17(e.qn.L) << ','
                << fmt17(e.qn.N) << ',' << fmt17(e.energy_internal) << ','
                << fmt17(e.energy_over_eps0) << "\n";
    }
    return 0;
  }
  json results = json::array();
  for (const auto& e : entries) {
    json row = to_json(e);
    row["E"] = (units == "epsilon0") ? e.energy_over_eps0 : e.energy_internal;
    results.push_back(std::move(row));
  }
  json params = {{"eta", eta},
                 {"sigma", sigma},
                 {"m_min", m_min},
                 {"m_max", m_max},
                 {"max_excitation", max_excitation},
                 {"units", units}};
  std::cout << make_doc("spectrum", params, results, meta).dump(2) << "\n";
  return 0;
}

int cmd_wavefunction(double eta, double sigma, int m, int nu, int nprime,
                     double r_max, int samples, const std::string& emit,
                     const std::string& format, bool meta) {
  const HartmannParams p(eta, sigma);
  const UnitSystem units;
  const auto qn = derive_quantum_numbers(p, m, nu, nprime);
  const QuasiPoly u = build_u(qn.N, qn.L, p.gamma());
  const QuasiPoly R = radial_R(u);
  const double energy = energy_internal(qn.N, p.gamma());

  if (format == "csv") {
    if (emit != "samples") {
      std::cerr << "wavefunction: csv output supports --emit samples only\n";
      return 2;
    }
    print_csv_header("wavefunction", meta, "r,R,u");
    for (int i = 1; i <= samples; ++i) {
      const double r = r_max * i / samples;
      std::cout << fmt17(r) << ',' << fmt17(R.evaluate(r)) << ','
                << fmt17(u.evaluate(r)) << "\n";
    }
    return 0;
  }

  json results = json::array();
  json state = to_json(qn);
  state["E_internal"] = energy;
  if (emit == "symbolic" || emit == "both") {
    state["u"] = to_json(u);
    state["R"] = to_json(R);
  }
  if (emit == "samples" || emit == "both") {
    json rows = json::array();
    for (int i = 1; i <= samples; ++i) {
      const double r = r_max * i / samples;
      rows.push_back({r, R.evaluate(r), u.evaluate(r)});
    }
    state["samples"] = std::move(rows);
  }
  results.push_back(std::move(state));
  json params = {{"eta", eta},     {"sigma", sigma}, {"m", m},
                 {"nu", nu},       {"nprime", nprime}, {"r_max", r_max},
                 {"samples", samples}, {"emit", emit}};
  std::cout << make_doc("wavefunction", params, results, meta).dump(2) << "\n";
  return 0;
}

int cmd_potential(double eta, double sigma, double r_max, double theta,
                  int samples, const std::string& format, bool meta) {
  constexpr double kPi = 3.14159265358979323846;
  if (std::fabs(theta) < 1e-9 || std::fabs(theta - kPi) < 1e-9) {
    std::cerr << "potential: --theta must stay off the polar axis\n";
    return 2;
  }
  const HartmannParams p(eta, sigma);
  const UnitSystem units;
  if (format == "csv") {
    print_csv_header("potential", meta, "r,V");
    for (int i = 1; i <= samples; ++i) {
      const double r = r_max * i / samples;
      std::cout << fmt17(r) << ',' << fmt17(potential_value(p, units, r, theta))
                << "\n";
    }
    return 0;
  }
  json results = json::array();
  for (int i = 1; i <= samples; ++i) {
    const double r = r_max * i / samples;
    results.push_back({r, potential_value(p, units, r, theta)});
  }
  json params = {{"eta", eta},
                 {"sigma", sigma},
                 {"r_max", r_max},
                 {"theta", theta},
                 {"samples", samples}};
  std::cout << make_doc("potential", params, results, meta).dump(2) << "\n";
  return 0;
}

int cmd_validate(const ValidationOptions& opts, const std::string& format,
                 bool meta) {
  const auto report = run_validation(opts);
  if (format == "csv") {
    print_csv_header("validate", meta, "check,residual,tolerance,pass");
    for (const auto& c : report.checks) {
      std::cout << c.name << ',' << fmt17(c.residual) << ','
                << fmt17(c.tolerance) << ',' << (c.pass ? 1 : 0) << "\n";
    }
  } else {
    json results = json::array();
    for (const auto& c : report.checks) {
      results.push_back(to_json(c));
    }
    json params = {{"eta", opts.eta},       {"sigma", opts.sigma},
                   {"m", opts.m},           {"max_n", opts.max_n},
                   {"grid_n", opts.grid_n}, {"r_max", opts.r_max}};
    json doc = make_doc("validate", params, results, meta);
    doc["pass"] = report.pass;
    std::cout << doc.dump(2) << "\n";
  }
  return report.pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"SUSY factorization solver for the ring-shaped Hartmann potential"};
  app.require_subcommand(1);
  bool meta = false;
  app.add_flag("--meta", meta, "add a provenance header to the output");

  double eta = 1.0, sigma = 1.0;
  std::string format = "json";

  auto* sp = app.add_subcommand("spectrum", "enumerate bound-state energies");
  int m_min = 0, m_max = 0, max_excitation = 0;
  std::string units = "internal";
  sp->add_option("--eta", eta)->check(CLI::PositiveNumber);
  sp->add_option("--sigma", sigma)->check(CLI::PositiveNumber);
  sp->add_option("--m-min", m_min);
  sp->add_option("--m-max", m_max);
  sp->add_option("--max-excitation", max_excitation)
      ->check(CLI::NonNegativeNumber);
  sp->add_option("--units", units)->check(CLI::IsMember({"internal", "epsilon0"}));
  sp->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

  auto* wf = app.add_subcommand("wavefunction", "emit a radial eigenstate");
  int m = 0, nu = 0, nprime = 0, samples = 100;
  double r_max = 20.0;
  std::string emit = "symbolic";
  wf->add_option("--eta", eta)->check(CLI::PositiveNumber);
  wf->add_option("--sigma", sigma)->check(CLI::PositiveNumber);
  wf->add_option("--m", m);
  wf->add_option("--nu", nu)->check(CLI::NonNegativeNumber);
  wf->add_option("--nprime", nprime)->check(CLI::NonNegativeNumber);
  wf->add_option("--r-max", r_max)->check(CLI::PositiveNumber);
  wf->add_option("--samples", samples)->check(CLI::PositiveNumber);
  wf->add_option("--emit", emit)
      ->check(CLI::IsMember({"symbolic", "samples", "both"}));
  wf->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

  auto* pot = app.add_subcommand("potential", "sample V(r, theta)");
  double theta = 1.5707963267948966;
  pot->add_option("--eta", eta)->check(CLI::PositiveNumber);
  pot->add_option("--sigma", sigma)->check(CLI::PositiveNumber);
  pot->add_option("--r-max", r_max)->check(CLI::PositiveNumber);
  pot->add_option("--theta", theta);
  pot->add_option("--samples", samples)->check(CLI::PositiveNumber);
  pot->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

  auto* val = app.add_subcommand("validate", "run the validation suites");
  ValidationOptions vopts;
  std::string suite = "all";
  val->add_option("--eta", vopts.eta)->check(CLI::PositiveNumber);
  val->add_option("--sigma", vopts.sigma)->check(CLI::PositiveNumber);
  val->add_option("--m", vopts.m);
  val->add_option("--max-n", vopts.max_n)->check(CLI::PositiveNumber);
  val->add_option("--grid-n", vopts.grid_n)->check(CLI::PositiveNumber);
  val->add_option("--r-max", vopts.r_max)->check(CLI::NonNegativeNumber);
  val->add_option("--suite", suite)
      ->check(CLI::IsMember({"algebra", "numeric", "all"}));
  val->add_flag("--inject-error", vopts.inject_error,
                "flip one coefficient; the suite must then fail");
  val->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (sp->parsed()) {
      return cmd_spectrum(eta, sigma, m_min, m_max, max_excitation, units,
                          format, meta);
    }
    if (wf->parsed()) {
      return cmd_wavefunction(eta, sigma, m, nu, nprime, r_max, samples, emit,
                              format, meta);
    }
    if (pot->parsed()) {
      return cmd_potential(eta, sigma, r_max, theta, samples, format, meta);
    }
    if (suite == "algebra") {
      vopts.suite = ValidationSuite::algebra;
    } else if (suite == "numeric") {
      vopts.suite = ValidationSuite::numeric;
    }
    return cmd_validate(vopts, format, meta);
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
}
