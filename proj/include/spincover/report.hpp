#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace spincover {

// One verification record.  `ref` names the fact being checked and must be
// drawn from the fixed registry (or "plumbing" for artifact-internal
// contracts).
struct CheckRecord {
  std::string name;
  std::string ref;
  std::string expected;
  std::string got;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  // optional structured payload (JSON text), embedded verbatim in the JSON
  // rendering; used for table grids and integral values
  std::string data;
};

struct RunConfig {
  std::uint64_t seed = 1;
  int samples = 100;
  std::map<std::string, double> tol_overrides;
  std::string output = "human";  // json | csv | human

  // spatial battery flags
  std::string chart = "parabolic_cylindrical";
  std::string dump_field_path;

  // kfg battery flags
  double alpha = 0.7;
  int truncation = 60;
  double half_width = 4.0;
  int nodes = 200;
  bool schrodinger = false;
  std::string table_coord;  // x|y|u|v, empty = all
  std::string table_space;  // vector|spinor, empty = both
  std::string dump_phi_path;

  double tolerance(const std::string& check, double fallback) const;
};

struct Report {
  std::string battery;
  RunConfig config;
  std::vector<CheckRecord> checks;

  int failures() const;
  bool all_pass() const { return failures() == 0; }
  std::string to_json() const;
  std::string to_csv() const;
  std::string to_human() const;
  std::string render(const std::string& output_mode) const;
};

// Fixed registry of check reference names; audited by a unit test.
const std::set<std::string>& check_ref_registry();

}  // namespace spincover
