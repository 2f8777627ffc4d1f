#include "swp/run_config.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace swp {

namespace {

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& v) {
  try {
    size_t pos = 0;
    double d = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument("trailing characters");
    return d;
  } catch (const std::exception&) {
    throw std::runtime_error("config: invalid numeric value for '" + key + "': " + v);
  }
}

std::uint64_t parse_u64(const std::string& key, const std::string& v) {
  try {
    size_t pos = 0;
    unsigned long long u = std::stoull(v, &pos);
    if (pos != v.size()) throw std::invalid_argument("trailing characters");
    return u;
  } catch (const std::exception&) {
    throw std::runtime_error("config: invalid integer value for '" + key + "': " + v);
  }
}

}  // namespace

void RunConfig::apply_set(const std::string& assignment) {
  auto eq = assignment.find('=');
  if (eq == std::string::npos)
    throw std::runtime_error("config: expected key=value, got '" + assignment + "'");
  const std::string key = trim(assignment.substr(0, eq));
  const std::string val = trim(assignment.substr(eq + 1));

  if (key == "sigma0") sigma0 = parse_double(key, val);
  else if (key == "k0") k0 = parse_double(key, val);
  else if (key == "r0") r0 = parse_double(key, val);
  else if (key == "t") t = parse_double(key, val);
  else if (key == "model") model = val;
  else if (key == "b") b = parse_double(key, val);
  else if (key == "V0") V0 = parse_double(key, val);
  else if (key == "a") a = parse_double(key, val);
  else if (key == "Er") Er = parse_double(key, val);
  else if (key == "width") width = parse_double(key, val);
  else if (key == "theta_bg") theta_bg = parse_double(key, val);
  else if (key == "table_path") table_path = val;
  else if (key == "samples") samples = parse_u64(key, val);
  else if (key == "seed") seed = parse_u64(key, val);
  else if (key == "quad_n") quad_n = static_cast<int>(parse_u64(key, val));
  else if (key == "l_max") l_max = static_cast<int>(parse_u64(key, val));
  else if (key == "threads") threads = static_cast<int>(parse_u64(key, val));
  else if (key == "format") format = val;
  else if (key == "out") out = val;
  else throw std::runtime_error("config: unknown key '" + key + "'");
}

RunConfig RunConfig::parse(const std::string& text) {
  RunConfig cfg;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    try {
      cfg.apply_set(line);
    } catch (const std::runtime_error& e) {
      throw std::runtime_error("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return cfg;
}

RunConfig RunConfig::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("config: cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse(ss.str());
  } catch (const std::runtime_error& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

std::string RunConfig::render() const {
  std::ostringstream out_ss;
  out_ss << "sigma0 = " << fmt_double(sigma0) << "\n"
         << "k0 = " << fmt_double(k0) << "\n"
         << "r0 = " << fmt_double(r0) << "\n"
         << "t = " << fmt_double(t) << "\n"
         << "model = " << model << "\n"
         << "b = " << fmt_double(b) << "\n"
         << "V0 = " << fmt_double(V0) << "\n"
         << "a = " << fmt_double(a) << "\n"
         << "Er = " << fmt_double(Er) << "\n"
         << "width = " << fmt_double(width) << "\n"
         << "theta_bg = " << fmt_double(theta_bg) << "\n";
  if (!table_path.empty()) out_ss << "table_path = " << table_path << "\n";
  out_ss << "samples = " << samples << "\n"
         << "seed = " << seed << "\n"
         << "quad_n = " << quad_n << "\n"
         << "l_max = " << l_max << "\n"
         << "threads = " << threads << "\n"
         << "format = " << format << "\n";
  if (!out.empty()) out_ss << "out = " << out << "\n";
  return out_ss.str();
}

CollisionConfig RunConfig::make_collision() const {
  return CollisionConfig(sigma0, k0, r0, t);
}

PhaseShiftModel RunConfig::make_model() const {
  if (model == "hard_sphere") return HardSphere{b};
  if (model == "square_well") return SquareWell{V0, b};
  if (model == "zero_range") return ZeroRange{a};
  if (model == "breit_wigner") return BreitWigner{Er, width, theta_bg};
  if (model == "tabulated") {
    if (table_path.empty())
      throw std::runtime_error("config: tabulated model requires table_path");
    return Tabulated::from_file(table_path);
  }
  throw std::runtime_error("config: unknown model '" + model + "'");
}

}  // namespace swp
