#include "spincover/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace spincover {

double RunConfig::tolerance(const std::string& check, double fallback) const {
  const auto it = tol_overrides.find(check);
  return it == tol_overrides.end() ? fallback : it->second;
}

int Report::failures() const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(),
                                        [](const CheckRecord& c) { return !c.pass; }));
}

std::string Report::to_json() const {
  nlohmann::json j;
  j["schema"] = "1";
  j["battery"] = battery;
  j["config"] = {{"seed", config.seed},
                 {"samples", config.samples},
                 {"output", config.output},
                 {"tolerance_overrides", config.tol_overrides}};
  if (battery == "spatial") {
    j["config"]["chart"] = config.chart;
  }
  if (battery == "kfg") {
    j["config"]["alpha"] = config.alpha;
    j["config"]["truncation"] = config.truncation;
    j["config"]["half_width"] = config.half_width;
    j["config"]["nodes"] = config.nodes;
    j["config"]["schrodinger"] = config.schrodinger;
  }
  j["checks"] = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json jc = {{"name", c.name},     {"ref", c.ref},
                         {"expected", c.expected}, {"got", c.got},
                         {"residual", c.residual}, {"tolerance", c.tolerance},
                         {"pass", c.pass}};
    if (!c.data.empty()) jc["data"] = nlohmann::json::parse(c.data);
    j["checks"].push_back(std::move(jc));
  }
  j["summary"] = {{"total", checks.size()},
                  {"failed", failures()},
                  {"pass", all_pass()}};
  return j.dump(2);
}

std::string Report::to_csv() const {
  std::ostringstream os;
  os << "battery,name,ref,expected,got,residual,tolerance,pass\n";
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char ch : s) {
      if (ch == '"') out += "\"\"";
      out += ch;
    }
    out += '"';
    return out;
  };
  for (const auto& c : checks) {
    os << battery << ',' << quote(c.name) << ',' << c.ref << ',' << quote(c.expected)
       << ',' << quote(c.got) << ',' << c.residual << ',' << c.tolerance << ','
       << (c.pass ? "true" : "false") << '\n';
  }
  return os.str();
}

std::string Report::to_human() const {
  std::ostringstream os;
  os << "battery: " << battery << " (seed " << config.seed << ", samples "
     << config.samples << ")\n";
  for (const auto& c : checks) {
    os << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.name;
    if (!c.expected.empty()) os << "  expected=" << c.expected << " got=" << c.got;
    os << "  residual=" << c.residual << " tol=" << c.tolerance << "  (" << c.ref
       << ")\n";
  }
  os << "summary: " << (checks.size() - size_t(failures())) << "/" << checks.size()
     << " passed\n";
  return os.str();
}

std::string Report::render(const std::string& output_mode) const {
  if (output_mode == "json") return to_json();
  if (output_mode == "csv") return to_csv();
  return to_human();
}

const std::set<std::string>& check_ref_registry() {
  static const std::set<std::string> registry = {
      // group battery
      "covering-homomorphism",
      "metric-preservation",
      "two-to-one-cover",
      "bispinor-homomorphism",
      "discrete-multiplication-table",
      "covering-group-relations",
      "generator-bispinor-commutation",
      "similarity-witness",
      "representation-signs",
      "representation-equivalence",
      "representation-inequivalence",
      "vector-representations",
      "partly-extended-collapse",
      "majorana-reality",
      // spatial battery
      "spinor-norm-identities",
      "pseudovector-roundtrip",
      "vector-roundtrip",
      "directional-derivative-xi",
      "directional-derivative-eta",
      "cauchy-riemann",
      "transmutation",
      "chart-consistency",
      "chart-ode",
      "double-cover-periodicity",
      // kfg battery
      "chart-jacobian",
      "series-recurrence",
      "series-duality",
      "series-ode-residual",
      "parity-operator",
      "boundary-behavior",
      "diagonal-operator",
      "orthogonality",
      "selection-rules",
      "schrodinger-variant",
      // artifact-internal contracts
      "plumbing",
  };
  return registry;
}

}  // namespace spincover
