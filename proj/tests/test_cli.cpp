#include <doctest.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "hartmann/serialize.hpp"

namespace {

struct CommandResult {
  int exit_code;
  std::string output;
};

CommandResult run_cli(const std::string& args) {
  const std::string cmd = std::string(HARTMANN_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
    out.append(buf.data(), got);
  }
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), std::move(out)};
}

} // namespace

TEST_CASE("spectrum command") {
  const auto res = run_cli(
      "spectrum --eta 1 --sigma 1 --m-min 0 --m-max 0 --max-excitation 1 "
      "--format csv");
  CHECK(res.exit_code == 0);
  CHECK(res.output.rfind(
            "m,nu_prime,n_prime,M_abs,L,N,E_internal,E_over_eps0\n", 0) == 0);
  CHECK(res.output.find("-0.125") != std::string::npos);
  CHECK(res.output.find("-0.055555555555555") != std::string::npos);

  SUBCASE("invalid flag value exits 2") {
    const auto bad = run_cli("spectrum --eta -1");
    CHECK(bad.exit_code == 2);
    CHECK(bad.output.find("--eta") != std::string::npos);
  }
  SUBCASE("unknown flag exits 2") {
    CHECK(run_cli("spectrum --bogus 3").exit_code == 2);
  }
}

TEST_CASE("wavefunction command") {
  SUBCASE("symbolic emission round-trips against samples") {
    const auto sym = run_cli(
        "wavefunction --eta 1 --sigma 1 --m 0 --nu 0 --nprime 0 "
        "--emit symbolic --format json");
    REQUIRE(sym.exit_code == 0);
    const auto doc = nlohmann::json::parse(sym.output);
    CHECK(doc.at("command") == "wavefunction");
    const auto& state = doc.at("results").at(0);
    CHECK(state.at("L").get<double>() == doctest::Approx(1.0));
    CHECK(state.at("N").get<double>() == doctest::Approx(2.0));
    const auto R = hartmann::quasipoly_from_json(state.at("R"));
    CHECK(R.alpha() == doctest::Approx(1.0));
    CHECK(R.kappa() == doctest::Approx(0.5));
    CHECK(R.coeffs().at(0) ==
          doctest::Approx(0.20412414523193151).epsilon(1e-13));

    const auto smp = run_cli(
        "wavefunction --eta 1 --sigma 1 --m 0 --nu 0 --nprime 0 "
        "--emit samples --r-max 10 --samples 20 --format csv");
    REQUIRE(smp.exit_code == 0);
    std::istringstream lines(smp.output);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "r,R,u");
    while (std::getline(lines, line)) {
      const auto c1 = line.find(','), c2 = line.find(',', line.find(',') + 1);
      const double r = std::stod(line.substr(0, c1));
      const double Rv = std::stod(line.substr(c1 + 1, c2 - c1 - 1));
      CHECK(std::fabs(R.evaluate(r) - Rv) <= 1e-12);
    }
  }
  SUBCASE("invalid quantum numbers exit 2") {
    CHECK(run_cli("wavefunction --nu -1").exit_code == 2);
  }
}

TEST_CASE("potential command") {
  const auto res = run_cli(
      "potential --eta 1 --sigma 1 --r-max 2 --samples 1 --format csv");
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("-0.375") != std::string::npos);
  CHECK(run_cli("potential --theta 0").exit_code == 2);
  CHECK(run_cli("potential --theta 3.14159265358979").exit_code == 2);
}

TEST_CASE("validate command") {
  SUBCASE("algebra suite passes quickly") {
    const auto res = run_cli(
        "validate --eta 1 --sigma 1 --m 0 --max-n 3 --suite algebra "
        "--format csv");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("riccati-expansion") != std::string::npos);
    CHECK(res.output.find("fd-eigenvalue") == std::string::npos);
  }
  SUBCASE("injected error is caught") {
    const auto res = run_cli(
        "validate --eta 1 --sigma 1 --m 0 --max-n 3 --suite algebra "
        "--inject-error");
    CHECK(res.exit_code == 1);
  }
}

TEST_CASE("deterministic output") {
  const std::string cmd =
      "spectrum --eta 1.5 --sigma 2 --m-min -1 --m-max 1 --max-excitation 2";
  const auto a = run_cli(cmd);
  const auto b = run_cli(cmd);
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
}
