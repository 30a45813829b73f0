#pragma once

#include <json.hpp>

#include "hartmann/model.hpp"
#include "hartmann/quasipoly.hpp"
#include "hartmann/validation.hpp"

namespace hartmann {

inline nlohmann::json to_json(const QuasiPoly& f) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& [k, c] : f.coeffs()) {
    coeffs.push_back({k, c});
  }
  return {{"alpha", f.alpha()}, {"kappa", f.kappa()}, {"coeffs", coeffs}};
}

inline QuasiPoly quasipoly_from_json(const nlohmann::json& j) {
  std::map<int, double> coeffs;
  for (const auto& pair : j.at("coeffs")) {
    coeffs[pair.at(0).get<int>()] = pair.at(1).get<double>();
  }
  return QuasiPoly(j.at("alpha").get<double>(), j.at("kappa").get<double>(),
                   std::move(coeffs));
}

inline nlohmann::json to_json(const QuantumNumbers& qn) {
  return {{"m", qn.m},         {"nu_prime", qn.nu_prime},
          {"n_prime", qn.n_prime}, {"M_abs", qn.M_abs},
          {"L", qn.L},         {"N", qn.N}};
}

inline nlohmann::json to_json(const SpectrumEntry& e) {
  nlohmann::json j = to_json(e.qn);
  j["E_internal"] = e.energy_internal;
  j["E_over_eps0"] = e.energy_over_eps0;
  return j;
}

inline nlohmann::json to_json(const ValidationCheck& c) {
  return {{"name", c.name},
          {"residual", c.residual},
          {"tolerance", c.tolerance},
          {"pass", c.pass}};
}

} // namespace hartmann
