#pragma once

#include <cstdint>
#include <string>

#include "swp/config.hpp"
#include "swp/phase_shift.hpp"

namespace swp {

// Flat, serializable run configuration: collision parameters, model selection,
// and command options. render()/parse() round-trip exactly.
struct RunConfig {
  // collision
  double sigma0 = 0.01;
  double k0 = 1.0;
  double r0 = 10.0;
  double t = 0.0;

  // model: hard_sphere | square_well | zero_range | breit_wigner | tabulated
  std::string model = "hard_sphere";
  double b = 1.0;         // hard_sphere / square_well range
  double V0 = 1.0;        // square_well depth
  double a = 0.0;         // zero_range scattering length
  double Er = 0.5;        // breit_wigner resonance energy
  double width = 0.1;     // breit_wigner width
  double theta_bg = 0.0;  // breit_wigner background phase
  std::string table_path; // tabulated input file

  // command options
  std::uint64_t samples = 1000000;
  std::uint64_t seed = 42;
  int quad_n = 200;
  int l_max = 48;
  int threads = 0;  // 0 = auto
  std::string format = "text";  // json | csv | text
  std::string out;

  // One "key = value" line per field, '#' comments allowed.
  static RunConfig parse(const std::string& text);
  static RunConfig parse_file(const std::string& path);
  std::string render() const;

  // key=value assignment (the CLI --set flag).
  void apply_set(const std::string& assignment);

  CollisionConfig make_collision() const;
  PhaseShiftModel make_model() const;

  bool operator==(const RunConfig&) const = default;
};

}  // namespace swp
