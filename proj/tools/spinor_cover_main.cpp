#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "spincover/batteries.hpp"

namespace {

int emit(const spincover::Report& rep, const spincover::RunConfig& cfg,
         const std::string& out_path) {
  const std::string text = rep.render(cfg.output);
  if (out_path.empty()) {
    std::cout << text << std::endl;
  } else {
    std::ofstream os(out_path);
    if (!os) {
      std::cerr << "cannot open output file: " << out_path << std::endl;
      return 2;
    }
    os << text << std::endl;
  }
  return rep.all_pass() ? 0 : 1;
}

bool parse_tol(const std::vector<std::string>& items, spincover::RunConfig& cfg,
               std::string& err) {
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == item.size()) {
      err = "expected --tol check=value, got '" + item + "'";
      return false;
    }
    try {
      cfg.tol_overrides[item.substr(0, eq)] = std::stod(item.substr(eq + 1));
    } catch (const std::exception&) {
      err = "bad tolerance value in '" + item + "'";
      return false;
    }
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical verification batteries for the spinor covering library"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand

  spincover::RunConfig cfg;
  if (const char* env = std::getenv("SPINOR_COVER_SEED")) {
    cfg.seed = std::strtoull(env, nullptr, 10);
  }
  std::string out_path;
  std::vector<std::string> tol_items;

  app.add_option("--seed", cfg.seed, "RNG seed (fallback: SPINOR_COVER_SEED)");
  app.add_option("--samples", cfg.samples, "random sample count per check")
      ->check(CLI::PositiveNumber);
  app.add_option("--output", cfg.output, "report format")
      ->check(CLI::IsMember({"json", "csv", "human"}));
  app.add_option("--out", out_path, "write the report to a file instead of stdout");
  app.add_option("--tol", tol_items, "per-check tolerance override, check=value");

  auto* groups = app.add_subcommand("verify-groups",
                                    "discrete generators, covering groups, "
                                    "representations, reality scan");

  auto* spatial = app.add_subcommand("spatial",
                                     "spatial spinor maps, derivatives, charts");
  spatial->add_option("--chart", cfg.chart, "chart for --dump-field")
      ->check(CLI::IsMember(
          {"cartesian", "parabolic_cylindrical", "parabolic", "spherical"}));
  spatial->add_option("--dump-field", cfg.dump_field_path,
                      "write a CSV field sample for the selected chart");

  auto* kfg = app.add_subcommand("kfg",
                                 "separated wave solutions: series, parity classes, "
                                 "orthogonality, selection rules");
  kfg->add_option("--alpha", cfg.alpha, "canonical separation constant");
  kfg->add_option("--series-n", cfg.truncation, "series truncation order")
      ->check(CLI::Range(24, 160));
  kfg->add_option("--box", cfg.half_width, "quadrature half width L")
      ->check(CLI::PositiveNumber);
  kfg->add_option("--nodes", cfg.nodes, "quadrature nodes per axis (even)");
  kfg->add_flag("--schrodinger", cfg.schrodinger,
                "run the battery under the nonrelativistic mapping");
  kfg->add_option("--table", cfg.table_coord, "restrict selection tables to one coordinate")
      ->check(CLI::IsMember({"x", "y", "u", "v"}));
  kfg->add_option("--space", cfg.table_space, "restrict selection tables to one space")
      ->check(CLI::IsMember({"vector", "spinor"}));
  kfg->add_option("--dump-phi", cfg.dump_phi_path, "write a CSV grid of the ++ solution");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  std::string err;
  if (!parse_tol(tol_items, cfg, err)) {
    std::cerr << err << std::endl;
    return 2;
  }

  try {
    if (groups->parsed()) return emit(spincover::run_group_battery(cfg), cfg, out_path);
    if (spatial->parsed()) return emit(spincover::run_spatial_battery(cfg), cfg, out_path);
    if (kfg->parsed()) return emit(spincover::run_kfg_battery(cfg), cfg, out_path);
  } catch (const std::invalid_argument& e) {
    std::cerr << "configuration error: " << e.what() << std::endl;
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 1;
  }
  return 2;
}
