// Command-line front end: purity for a configuration, parameter sweeps, the
// oracle validation suite, and shell-purity scaling runs.

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "swp/analytic.hpp"
#include "swp/oracle.hpp"
#include "swp/run_config.hpp"
#include "swp/shell.hpp"
#include "swp/validation.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidationFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitRegimeViolation = 3;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// Field order is the documented CSV column order.
using Row = std::vector<std::pair<std::string, std::string>>;

Row purity_row(const swp::RunConfig& rc) {
  const auto cfg = rc.make_collision();
  const auto model = rc.make_model();
  const auto rep = swp::purity(cfg, model);
  const auto narrow = swp::purity_narrow(cfg, model);
  const auto scales = swp::derived_scales(cfg);
  const double s0k0 = swp::cross_section(model, cfg.k0);
  const double key_param = scales.sigma_c * scales.sigma_c * s0k0;

  Row row;
  row.emplace_back("sigma0", fmt(rc.sigma0));
  row.emplace_back("k0", fmt(rc.k0));
  row.emplace_back("r0", fmt(rc.r0));
  row.emplace_back("t", fmt(rc.t));
  row.emplace_back("model", rc.model);
  row.emplace_back("purity", fmt(rep.purity));
  row.emplace_back("one_minus_purity", fmt(rep.one_minus_purity));
  row.emplace_back("epsilon_sq", fmt(rep.epsilon_sq));
  row.emplace_back("purity_narrow", fmt(narrow.purity));
  row.emplace_back("one_minus_purity_narrow", fmt(narrow.one_minus_purity));
  row.emplace_back("gamma_sq", fmt(scales.gamma_sq));
  row.emplace_back("sigma_c", fmt(scales.sigma_c));
  row.emplace_back("S0_k0", fmt(s0k0));
  row.emplace_back("sigma_c_sq_S0", fmt(key_param));
  row.emplace_back("sigma0_over_k0", fmt(rep.diagnostics.sigma0_over_k0));
  row.emplace_back("sigma0_theta_prime", fmt(rep.diagnostics.sigma0_theta_prime));
  row.emplace_back("sigma0_sq_theta_double_prime",
                   fmt(rep.diagnostics.sigma0_sq_theta_double_prime));
  row.emplace_back("method", to_string(rep.method));
  return row;
}

std::string to_json(const Row& row) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [k, v] : row) {
    if (!first) os << ", ";
    first = false;
    // All values are numbers except the model/method names.
    const bool quoted = (k == "model" || k == "method");
    os << "\"" << k << "\": ";
    if (quoted) os << "\"" << v << "\"";
    else os << v;
  }
  os << "}";
  return os.str();
}

std::string to_text(const Row& row) {
  size_t width = 0;
  for (const auto& [k, v] : row) width = std::max(width, k.size());
  std::ostringstream os;
  for (const auto& [k, v] : row) {
    os << k << std::string(width - k.size() + 2, ' ') << v << "\n";
  }
  return os.str();
}

std::string csv_header(const Row& row) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : row) {
    if (!first) os << ",";
    first = false;
    os << k;
  }
  os << "\n";
  return os.str();
}

std::string csv_line(const Row& row) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : row) {
    if (!first) os << ",";
    first = false;
    os << v;
  }
  os << "\n";
  return os.str();
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file '" + out_path + "'");
  out << text;
}

std::vector<double> parse_value_list(const std::string& csv) {
  std::vector<double> values;
  if (csv.empty()) return values;
  std::istringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t pos = 0;
    values.push_back(std::stod(item, &pos));
    if (pos != item.size()) throw std::runtime_error("bad numeric value '" + item + "'");
  }
  return values;
}

int cmd_purity(const swp::RunConfig& rc) {
  const Row row = purity_row(rc);
  std::string text;
  if (rc.format == "json") text = to_json(row) + "\n";
  else if (rc.format == "csv") text = csv_header(row) + csv_line(row);
  else text = to_text(row);
  emit(text, rc.out);
  return kExitOk;
}

int cmd_sweep(const swp::RunConfig& rc, const std::string& axis,
              const std::string& values_csv) {
  static const std::vector<std::string> kAxes{"sigma0", "k0", "r0", "t", "b",
                                              "V0", "a", "Er", "width", "theta_bg"};
  if (std::find(kAxes.begin(), kAxes.end(), axis) == kAxes.end())
    throw CLI::ValidationError("sweep", "unknown axis '" + axis + "'");
  const std::vector<double> values = parse_value_list(values_csv);

  std::ostringstream os;
  bool wrote_header = false;
  for (double v : values) {
    swp::RunConfig point = rc;
    point.apply_set(axis + " = " + fmt(v));
    const Row row = purity_row(point);
    if (!wrote_header) {
      os << csv_header(row);
      wrote_header = true;
    }
    os << csv_line(row);
  }
  if (!wrote_header) {
    // Header-only output for an empty sweep.
    swp::RunConfig probe = rc;
    os << csv_header(purity_row(probe));
  }
  emit(os.str(), rc.out);
  return kExitOk;
}

int cmd_validate(const swp::RunConfig& rc, const std::string& suite_name) {
  swp::ValidationSuite suite;
  if (suite_name == "quick") suite = swp::ValidationSuite::quick;
  else if (suite_name == "full") suite = swp::ValidationSuite::full;
  else throw CLI::ValidationError("validate", "suite must be 'quick' or 'full'");

  swp::ValidationParams params;
  params.sigma0 = rc.sigma0;
  params.k0 = rc.k0;
  params.r0 = rc.r0;
  params.hard_sphere_b = rc.b;
  params.samples = rc.samples;
  params.seed = rc.seed;
  params.quad_n = rc.quad_n;
  params.threads = rc.threads;

  const auto checks = swp::run_validation(suite, params);
  std::ostringstream os;
  bool all_pass = true;
  for (const auto& c : checks) {
    all_pass = all_pass && c.pass;
    os << (c.pass ? "[PASS] " : "[FAIL] ") << c.name
       << "  measured=" << fmt(c.measured) << "  target=" << fmt(c.target)
       << "  tolerance=" << fmt(c.tolerance);
    if (!c.detail.empty()) os << "  (" << c.detail << ")";
    os << "\n";
  }
  os << (all_pass ? "ALL CHECKS PASSED" : "VALIDATION FAILED") << " ("
     << checks.size() << " checks, suite=" << suite_name << ")\n";
  emit(os.str(), rc.out);
  return all_pass ? kExitOk : kExitValidationFailure;
}

int cmd_shell_purity(const swp::RunConfig& rc, const std::string& values_csv) {
  const std::vector<double> sigma0_list = parse_value_list(values_csv);
  if (sigma0_list.size() < 3)
    throw CLI::ValidationError("shell-purity", "need at least 3 sigma0 values");

  const auto model = rc.make_model();
  std::ostringstream os;
  os << "sigma0,k0,l_max,shell_purity\n";
  std::vector<double> purities;
  for (double s : sigma0_list) {
    const swp::CollisionConfig cfg(s, rc.k0, rc.r0, rc.t);
    swp::RadialGridSpec spec;
    spec.n_radial = 96;
    spec.n_angular = rc.quad_n;
    // l_max must grow with k0/sigma0 to resolve the angular content.
    const int l_max = std::max(rc.l_max, static_cast<int>(std::ceil(6.0 * rc.k0 / s)));
    const double p = swp::shell_purity(swp::shell_sector_decompose(cfg, model, l_max, spec));
    purities.push_back(p);
    os << fmt(s) << "," << fmt(rc.k0) << "," << l_max << "," << fmt(p) << "\n";
  }
  os << "# loglog_slope = " << fmt(swp::loglog_slope(sigma0_list, purities)) << "\n";
  emit(os.str(), rc.out);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "s-wave wave-packet scattering: purity loss and entanglement diagnostics.\n"
      "CSV output uses '.' decimals, ',' separators, LF line endings; columns in\n"
      "the fixed order sigma0,k0,r0,t,model,purity,one_minus_purity,epsilon_sq,\n"
      "purity_narrow,one_minus_purity_narrow,gamma_sq,sigma_c,S0_k0,sigma_c_sq_S0,\n"
      "sigma0_over_k0,sigma0_theta_prime,sigma0_sq_theta_double_prime,method.\n"
      "All numbers are printed with 17 significant digits."};
  app.require_subcommand(1);

  std::string config_path, model_name, format, out_path;
  std::vector<std::string> sets;
  std::optional<std::uint64_t> samples, seed;
  std::optional<int> quad_n, l_max, threads;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "config file (key = value lines)");
    sub->add_option("--model", model_name,
                    "hard_sphere|square_well|zero_range|breit_wigner|tabulated");
    sub->add_option("--set", sets, "override a config key, e.g. --set sigma0=0.02")
        ->take_all();
    sub->add_option("--samples", samples, "Monte Carlo sample budget");
    sub->add_option("--seed", seed, "RNG seed");
    sub->add_option("--quad-n", quad_n, "quadrature nodes per axis");
    sub->add_option("--l-max", l_max, "max Legendre sector");
    sub->add_option("--threads", threads, "worker threads (0 = auto)");
    sub->add_option("--format", format, "json|csv|text");
    sub->add_option("--out", out_path, "output path (default stdout)");
  };

  auto* purity_cmd = app.add_subcommand("purity", "closed-form purity for one configuration");
  add_common(purity_cmd);

  auto* sweep_cmd = app.add_subcommand("sweep", "CSV sweep of one parameter");
  std::string axis, sweep_values;
  sweep_cmd->add_option("--axis", axis, "parameter to sweep")->required();
  sweep_cmd->add_option("--values", sweep_values, "comma-separated values");
  add_common(sweep_cmd);

  auto* validate_cmd = app.add_subcommand("validate", "run the oracle validation suite");
  std::string suite = "quick";
  validate_cmd->add_option("--suite", suite, "quick|full");
  add_common(validate_cmd);

  auto* shell_cmd = app.add_subcommand("shell-purity",
                                       "shell purity vs sigma0 with fitted slope");
  std::string sigma0_values;
  shell_cmd->add_option("--sigma0-list", sigma0_values, "comma-separated sigma0 values")
      ->required();
  add_common(shell_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Normalize all parse failures to the usage-error code; --help stays 0.
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    swp::RunConfig rc;
    if (!config_path.empty()) rc = swp::RunConfig::parse_file(config_path);
    if (!model_name.empty()) rc.model = model_name;
    for (const auto& s : sets) rc.apply_set(s);
    if (samples) rc.samples = *samples;
    if (seed) rc.seed = *seed;
    if (quad_n) rc.quad_n = *quad_n;
    if (l_max) rc.l_max = *l_max;
    if (threads) rc.threads = *threads;
    if (!format.empty()) rc.format = format;
    if (!out_path.empty()) rc.out = out_path;

    if (purity_cmd->parsed()) return cmd_purity(rc);
    if (sweep_cmd->parsed()) return cmd_sweep(rc, axis, sweep_values);
    if (validate_cmd->parsed()) return cmd_validate(rc, suite);
    if (shell_cmd->parsed()) return cmd_shell_purity(rc, sigma0_values);
    return kExitUsage;
  } catch (const swp::PerturbativeRegimeViolation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRegimeViolation;
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
