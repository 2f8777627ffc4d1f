// End-to-end tests of the command-line tool. The binary path arrives as the
// first non-doctest argument (wired up by CTest).
#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "swp/rng.hpp"
#include "swp/run_config.hpp"

namespace {

std::string g_binary;

struct RunResult {
  int exit_code;
  std::string output;  // stdout + stderr
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = g_binary + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

double json_field(const std::string& json, const std::string& key) {
  const auto pos = json.find("\"" + key + "\":");
  REQUIRE(pos != std::string::npos);
  return std::stod(json.substr(pos + key.size() + 3));
}

std::string json_field_str(const std::string& json, const std::string& key) {
  const auto pos = json.find("\"" + key + "\": \"");
  REQUIRE(pos != std::string::npos);
  const auto start = pos + key.size() + 5;
  return json.substr(start, json.find('"', start) - start);
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(std::move(cells));
  }
  return rows;
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

}  // namespace

TEST_CASE("purity text output on defaults") {
  const auto r = run_cli("purity");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("purity") != std::string::npos);
  CHECK(r.output.find("one_minus_purity") != std::string::npos);
  CHECK(r.output.find("hard_sphere") != std::string::npos);
}

TEST_CASE("no scattering gives purity 1 in json") {
  const auto r = run_cli("purity --model zero_range --set a=0 --format json");
  CHECK(r.exit_code == 0);
  CHECK(json_field(r.output, "purity") == 1.0);
  CHECK(json_field(r.output, "one_minus_purity") == 0.0);
  CHECK(json_field(r.output, "epsilon_sq") == 0.0);
}

TEST_CASE("emitted narrow-limit fields are internally consistent") {
  const auto r = run_cli("purity --format json");
  CHECK(r.exit_code == 0);
  const double omp_narrow = json_field(r.output, "one_minus_purity_narrow");
  const double sigma_c = json_field(r.output, "sigma_c");
  const double s0 = json_field(r.output, "S0_k0");
  CHECK(omp_narrow == doctest::Approx(sigma_c * sigma_c * s0 / std::numbers::pi)
                          .epsilon(1e-15));
  CHECK(json_field(r.output, "sigma_c_sq_S0") ==
        doctest::Approx(sigma_c * sigma_c * s0).epsilon(1e-15));
  CHECK(json_field_str(r.output, "method") == "expansion_eq16");
}

TEST_CASE("numeric output is round-trip safe (17 significant digits)") {
  const auto r = run_cli("purity --format json");
  const double p = json_field(r.output, "purity");
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", p);
  CHECK(r.output.find(buf) != std::string::npos);
}

TEST_CASE("identical invocations are byte-identical") {
  const std::string cmd = "purity --model square_well --set V0=1 --set b=1 --format json";
  CHECK(run_cli(cmd).output == run_cli(cmd).output);
}

TEST_CASE("output lands in --out unchanged") {
  const auto path = temp_path("swp_out.json");
  const auto direct = run_cli("purity --format json");
  const auto filed = run_cli("purity --format json --out " + path);
  CHECK(filed.exit_code == 0);
  std::ifstream in(path, std::ios::binary);
  std::stringstream content;
  content << in.rdbuf();
  CHECK(content.str() == direct.output);
  std::filesystem::remove(path);
}

TEST_CASE("usage and config errors exit 2") {
  CHECK(run_cli("purity --set nonsense=1").exit_code == 2);
  CHECK(run_cli("purity --config /nonexistent.cfg").exit_code == 2);
  CHECK(run_cli("purity --model no_such_model").exit_code == 2);
  CHECK(run_cli("sweep --axis bogus --values 1,2,3").exit_code == 2);
  CHECK(run_cli("purity --set sigma0=-1").exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code != 0);
}

TEST_CASE("corrupt tabulated file exits 2 and names the line") {
  const auto path = temp_path("swp_bad_table.txt");
  std::ofstream(path) << "0.5 -0.1\n1.0 -0.2\nbroken\n2.0 -0.4\n";
  const auto r = run_cli("purity --model tabulated --set table_path=" + path);
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("line 3") != std::string::npos);
  std::filesystem::remove(path);
}

TEST_CASE("regime violation exits 3 and names the threshold") {
  const auto r =
      run_cli("purity --model zero_range --set a=100 --set sigma0=0.3 --set r0=0");
  CHECK(r.exit_code == 3);
  CHECK(r.output.find("0.1") != std::string::npos);
}

TEST_CASE("sweep emits one csv row per value, narrow column scales as sigma0^2") {
  const auto r = run_cli(
      "sweep --axis sigma0 --values 0.005,0.01,0.02 --set r0=0 --format csv");
  CHECK(r.exit_code == 0);
  const auto rows = parse_csv(r.output);
  REQUIRE(rows.size() == 4);  // header + 3 rows
  const auto& header = rows[0];
  const auto col = [&](const std::string& name) {
    for (size_t i = 0; i < header.size(); ++i)
      if (header[i] == name) return i;
    REQUIRE(false);
    return size_t{0};
  };
  const size_t c = col("one_minus_purity_narrow");
  const double v1 = std::stod(rows[1][c]);
  const double v2 = std::stod(rows[2][c]);
  const double v3 = std::stod(rows[3][c]);
  CHECK(v2 / v1 == doctest::Approx(4.0).epsilon(1e-6));
  CHECK(v3 / v2 == doctest::Approx(4.0).epsilon(1e-6));
  CHECK(r.output.find('\r') == std::string::npos);  // LF only
}

TEST_CASE("sweep over resonance detuning peaks where the cross section peaks") {
  const auto r = run_cli(
      "sweep --axis Er --values 0.2,0.35,0.5,0.65,0.8 --model breit_wigner "
      "--set width=0.1 --format csv");
  CHECK(r.exit_code == 0);
  const auto rows = parse_csv(r.output);
  REQUIRE(rows.size() == 6);
  const auto& header = rows[0];
  size_t c_omp = 0, c_s0 = 0;
  for (size_t i = 0; i < header.size(); ++i) {
    if (header[i] == "one_minus_purity") c_omp = i;
    if (header[i] == "S0_k0") c_s0 = i;
  }
  size_t argmax_omp = 1, argmax_s0 = 1;
  for (size_t i = 2; i < rows.size(); ++i) {
    if (std::stod(rows[i][c_omp]) > std::stod(rows[argmax_omp][c_omp])) argmax_omp = i;
    if (std::stod(rows[i][c_s0]) > std::stod(rows[argmax_s0][c_s0])) argmax_s0 = i;
  }
  CHECK(argmax_omp == argmax_s0);
  // k0 = 1 means E = 0.5; the Er = 0.5 row sits on resonance.
  CHECK(std::stod(rows[argmax_s0][0]) == doctest::Approx(0.01));  // sigma0 col sanity
}

TEST_CASE("empty sweep emits only the header") {
  const auto r = run_cli("sweep --axis sigma0 --values '' --format csv");
  CHECK(r.exit_code == 0);
  const auto rows = parse_csv(r.output);
  CHECK(rows.size() == 1);
  CHECK(rows[0][0] == "sigma0");
}

TEST_CASE("config file round-trips through the cli") {
  swp::RunConfig rc;
  rc.sigma0 = 0.015;
  rc.model = "square_well";
  rc.V0 = 2.5;
  rc.b = 0.7;
  rc.format = "json";
  const auto path = temp_path("swp_roundtrip.cfg");
  std::ofstream(path) << rc.render();
  const auto via_config = run_cli("purity --config " + path);
  const auto via_flags = run_cli(
      "purity --model square_well --set sigma0=0.015 --set V0=2.5 --set b=0.7 "
      "--format json");
  CHECK(via_config.exit_code == 0);
  CHECK(via_config.output == via_flags.output);
  std::filesystem::remove(path);
}

TEST_CASE("run config parse/render round-trip on randomized configs") {
  swp::RngStream rng(42, 900);
  for (int i = 0; i < 200; ++i) {
    swp::RunConfig rc;
    rc.sigma0 = 1e-3 + rng.uniform();
    rc.k0 = 0.5 + rng.uniform();
    rc.r0 = 100.0 * rng.uniform();
    rc.t = 10.0 * rng.uniform();
    rc.b = 0.1 + rng.uniform();
    rc.V0 = 0.1 + 5.0 * rng.uniform();
    rc.a = -3.0 + 6.0 * rng.uniform();
    rc.Er = rng.uniform();
    rc.width = 0.01 + rng.uniform();
    rc.theta_bg = rng.uniform();
    rc.samples = 1 + (rng.next_u64() % 1000000);
    rc.seed = rng.next_u64();
    rc.quad_n = 10 + static_cast<int>(rng.next_u64() % 500);
    rc.l_max = 8 + static_cast<int>(rng.next_u64() % 100);
    rc.threads = static_cast<int>(rng.next_u64() % 16);
    rc.model = (i % 2) ? "breit_wigner" : "zero_range";
    rc.format = (i % 3) ? "json" : "csv";
    CHECK(swp::RunConfig::parse(rc.render()) == rc);
  }
}

TEST_CASE("shell-purity needs at least 3 sigma0 values") {
  CHECK(run_cli("shell-purity --sigma0-list 0.1,0.2").exit_code == 2);
}

TEST_CASE("shell-purity reports rows and a slope near 2") {
  const auto r = run_cli(
      "shell-purity --sigma0-list 0.1,0.15,0.2 --set r0=0 --format csv");
  CHECK(r.exit_code == 0);
  const auto rows = parse_csv(r.output);
  REQUIRE(rows.size() == 4);
  // Purity rises with sigma0.
  CHECK(std::stod(rows[1][3]) < std::stod(rows[2][3]));
  CHECK(std::stod(rows[2][3]) < std::stod(rows[3][3]));
  const auto pos = r.output.find("loglog_slope = ");
  REQUIRE(pos != std::string::npos);
  const double slope = std::stod(r.output.substr(pos + 15));
  CHECK(slope == doctest::Approx(2.0).epsilon(0.1));
  // Determinism.
  CHECK(run_cli("shell-purity --sigma0-list 0.1,0.15,0.2 --set r0=0 --format csv")
            .output == r.output);
}

TEST_CASE("quick validation suite passes on defaults") {
  const auto r = run_cli("validate --suite quick");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("ALL CHECKS PASSED") != std::string::npos);
  CHECK(r.output.find("[FAIL]") == std::string::npos);
}

TEST_CASE("failing validation exits 1") {
  // A huge separation breaks the narrow-packet overlap targets.
  const auto r = run_cli("validate --suite quick --set r0=1000000");
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("[FAIL]") != std::string::npos);
}

int main(int argc, char** argv) {
  doctest::Context ctx;
  ctx.applyCommandLine(argc, argv);
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (!arg.empty() && arg[0] != '-') g_binary = arg;
  }
  if (g_binary.empty()) {
    std::fprintf(stderr, "usage: cli_tests <path-to-swp-binary>\n");
    return 1;
  }
  return ctx.run();
}
