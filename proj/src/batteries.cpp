#include "spincover/batteries.hpp"

#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "spincover/kfg.hpp"
#include "spincover/lorentz_cover.hpp"
#include "spincover/spatial_spinor.hpp"

namespace spincover {

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

CheckRecord residual_check(const RunConfig& cfg, const std::string& name,
                           const std::string& ref, double residual, double tol_default,
                           const std::string& expected = "", const std::string& got = "") {
  CheckRecord c;
  c.name = name;
  c.ref = ref;
  c.residual = residual;
  c.tolerance = cfg.tolerance(name, tol_default);
  c.pass = residual <= c.tolerance;
  c.expected = expected;
  c.got = got;
  return c;
}

// row-major array of [re, im] pairs
nlohmann::json matrix_json(const Matrix4& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      rows.push_back({std::real(m(i, j)), std::imag(m(i, j))});
    }
  }
  return rows;
}

CheckRecord flag_check(const RunConfig& cfg, const std::string& name,
                       const std::string& ref, bool ok, const std::string& expected,
                       const std::string& got) {
  CheckRecord c;
  c.name = name;
  c.ref = ref;
  c.residual = ok ? 0.0 : 1.0;
  c.tolerance = cfg.tolerance(name, 0.0);
  c.pass = ok || c.residual <= c.tolerance;
  c.expected = expected;
  c.got = got;
  return c;
}

}  // namespace

Report run_group_battery(const RunConfig& cfg) {
  Report rep;
  rep.battery = "verify-groups";
  rep.config = cfg;
  std::mt19937_64 rng(cfg.seed);
  const int n = std::max(1, cfg.samples);
  const RealMatrix4 g = minkowski_metric();

  {
    double hom = 0, metric = 0, cover = 0, shom = 0;
    for (int i = 0; i < n; ++i) {
      const SpinorParam k1 = random_spinor_param(rng);
      const SpinorParam k2 = random_spinor_param(rng);
      const RealMatrix4 l1 = lorentz_from_spinor(k1);
      const RealMatrix4 l2 = lorentz_from_spinor(k2);
      const SpinorParam k12 = spinor_compose(k1, k2);
      hom = std::max(hom,
                     (lorentz_from_spinor(k12) - l1 * l2).cwiseAbs().maxCoeff());
      metric = std::max(metric, (l1.transpose() * g * l1 - g).cwiseAbs().maxCoeff());
      cover = std::max(cover,
                       (lorentz_from_spinor(k1.negated()) - l1).cwiseAbs().maxCoeff());
      shom = std::max(shom, max_abs(bispinor(k12) - bispinor(k1) * bispinor(k2)));
    }
    rep.checks.push_back(residual_check(cfg, "covering-homomorphism",
                                        "covering-homomorphism", hom, 1e-10));
    rep.checks.push_back(
        residual_check(cfg, "metric-preservation", "metric-preservation", metric, 1e-10));
    rep.checks.push_back(
        residual_check(cfg, "two-to-one-cover", "two-to-one-cover", cover, 1e-12));
    rep.checks.push_back(residual_check(cfg, "bispinor-homomorphism",
                                        "bispinor-homomorphism", shom, 1e-10));
  }

  {
    const auto table = discrete_mult_table();
    const auto expected = discrete_mult_table_expected();
    bool ok = true;
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        Matrix4 want = Matrix4::Zero();
        want.topLeftCorner<2, 2>() = expected[i][j][0] * pauli(0);
        want.bottomRightCorner<2, 2>() = expected[i][j][1] * pauli(0);
        ok = ok && exact_equal(table[i][j], want);
      }
    }
    CheckRecord c = flag_check(cfg, "discrete-multiplication-table",
                               "discrete-multiplication-table", ok, "16/16 exact",
                               ok ? "16/16 exact" : "mismatch");
    nlohmann::json data;
    data["order"] = {"M", "M'", "N", "'N"};
    data["products"] = nlohmann::json::array();
    for (int i = 0; i < 4; ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (int j = 0; j < 4; ++j) row.push_back(matrix_json(table[i][j]));
      data["products"].push_back(std::move(row));
    }
    c.data = data.dump();
    rep.checks.push_back(c);
  }

  for (GroupId id : all_groups()) {
    const auto r = group_relations_check(id);
    rep.checks.push_back(flag_check(cfg, "covering-group-relations:" + to_string(id),
                                    "covering-group-relations", r.pass(),
                                    "squares and commutation exact",
                                    r.pass() ? "exact" : "violated"));
  }

  {
    double worst = 0;
    for (GenTag t : {GenTag::M, GenTag::Mp, GenTag::N, GenTag::Np}) {
      for (int i = 0; i < n; ++i) {
        worst = std::max(worst, commutation_check(t, random_spinor_param(rng)));
      }
    }
    rep.checks.push_back(residual_check(cfg, "generator-bispinor-commutation",
                                        "generator-bispinor-commutation", worst, 1e-12));
  }

  for (auto [src, dst] : {std::pair{GroupId::GM, GroupId::GN},
                          std::pair{GroupId::Gp, GroupId::pG}}) {
    const auto w = similarity_witness(src, dst, rng, n);
    const std::string name =
        "similarity-witness:" + to_string(src) + "->" + to_string(dst);
    CheckRecord c = residual_check(cfg, name, "similarity-witness",
                                   w.continuous_residual, 1e-12);
    c.pass = c.pass && w.generator_maps_exact;
    c.expected = "generators exact, continuous sector fixed";
    c.got = w.generator_maps_exact ? "exact" : "generator map failed";
    c.data = nlohmann::json{{"witness", matrix_json(w.a)}}.dump();
    rep.checks.push_back(c);
  }

  {
    // sign table spot checks plus multiplicativity of every T on products
    bool ok = true;
    const GroupElement m = make_element(GroupId::GM, SpinorParam::identity(), {GenTag::M});
    const GroupElement mp =
        make_element(GroupId::GM, SpinorParam::identity(), {GenTag::Mp});
    ok = ok && exact_equal(rep_value(GroupId::GM, RepId::T2, m),
                           Matrix4(-generator_matrix(GenTag::M)));
    ok = ok && exact_equal(rep_value(GroupId::GM, RepId::T4, mp),
                           generator_matrix(GenTag::Mp));
    double worst = 0;
    for (GroupId id : all_groups()) {
      const CoveringGroup& cg = covering_group(id);
      for (int i = 0; i < std::min(n, 20); ++i) {
        const GroupElement a =
            make_element(id, random_spinor_param(rng), {cg.gen1});
        const GroupElement b =
            make_element(id, random_spinor_param(rng), {cg.gen2});
        const GroupElement ab = multiply(a, b);
        for (RepId r : {RepId::T1, RepId::T2, RepId::T3, RepId::T4}) {
          worst = std::max(worst, max_abs(rep_value(id, r, ab) -
                                          rep_value(id, r, a) * rep_value(id, r, b)));
        }
      }
    }
    CheckRecord c = residual_check(cfg, "representation-signs", "representation-signs",
                                   worst, 1e-10);
    c.pass = c.pass && ok;
    c.expected = "sign table and multiplicativity";
    c.got = ok ? "match" : "sign mismatch";
    rep.checks.push_back(c);
  }

  for (GroupId id : all_groups()) {
    const auto r = rep_equivalence_check(id, rng, std::min(n, 20));
    CheckRecord c =
        residual_check(cfg, "representation-equivalence:" + to_string(id),
                       "representation-equivalence", r.max_residual, 1e-10,
                       "{T1,T2} {T3,T4}", r.partition());
    c.pass = c.pass && r.t1_t2_equivalent && r.t3_t4_equivalent;
    rep.checks.push_back(c);
    rep.checks.push_back(flag_check(
        cfg, "representation-inequivalence:" + to_string(id),
        "representation-inequivalence", r.t1_t3_inequivalent(),
        "tr T1 != tr T3 at the witness element", "trace gap " + fmt(r.trace_gap)));
  }

  {
    bool ok = true;
    const RealMatrix4 P = parity_reflection();
    const RealMatrix4 T = time_reflection();
    ok = ok && (vector_rep(VectorRepTag::F3, P) - P).cwiseAbs().maxCoeff() == 0.0;
    ok = ok && (vector_rep(VectorRepTag::F3, T) + T).cwiseAbs().maxCoeff() == 0.0;
    ok = ok && (vector_rep(VectorRepTag::F2, P) + P).cwiseAbs().maxCoeff() == 0.0;
    ok = ok && (vector_rep(VectorRepTag::F1, T) - T).cwiseAbs().maxCoeff() == 0.0;
    ok = ok && (vector_rep(VectorRepTag::F4, P) + P).cwiseAbs().maxCoeff() == 0.0;
    ok = ok && (vector_rep(VectorRepTag::F4, T) - T).cwiseAbs().maxCoeff() == 0.0;
    // multiplicativity across the four connected components
    const std::array<RealMatrix4, 4> comps = {RealMatrix4::Identity(), P, T,
                                              RealMatrix4(P * T)};
    bool mult = true;
    for (int i = 0; i < std::min(n, 50); ++i) {
      const RealMatrix4 l1 =
          lorentz_from_spinor(random_spinor_param(rng)) * comps[size_t(i) % 4];
      const RealMatrix4 l2 =
          lorentz_from_spinor(random_spinor_param(rng)) * comps[size_t(i + 1) % 4];
      for (VectorRepTag t : {VectorRepTag::F1, VectorRepTag::F2, VectorRepTag::F3,
                             VectorRepTag::F4}) {
        mult = mult && vector_rep_factor(t, l1 * l2) ==
                           vector_rep_factor(t, l1) * vector_rep_factor(t, l2);
      }
    }
    rep.checks.push_back(flag_check(cfg, "vector-representations",
                                    "vector-representations", ok && mult,
                                    "sign table and multiplicative characters",
                                    (ok && mult) ? "match" : "mismatch"));
  }

  for (auto [which, gen, label] :
       {std::tuple{PartlyExtended::SpatialReflection, GenTag::M, "improper-orthochronous"},
        std::tuple{PartlyExtended::TimeReflection, GenTag::N, "proper-nonorthochronous"}}) {
    const auto r = partly_extended_analysis(which, gen, rng, std::min(n, 50));
    rep.checks.push_back(flag_check(
        cfg, std::string("partly-extended-collapse:") + label,
        "partly-extended-collapse", r.pass(), "single equivalence class",
        std::to_string(r.equivalence_classes) + " class(es)"));
  }

  {
    const auto r = majorana_reality_scan(rng, n);
    rep.checks.push_back(residual_check(cfg, "majorana-reality:continuous",
                                        "majorana-reality", r.max_s_imag, 1e-12));
    const auto real_groups = r.fully_real_groups();
    const bool ok = real_groups.size() == 1 && real_groups[0] == GroupId::pGp;
    std::string got;
    for (GroupId id : real_groups) got += to_string(id) + " ";
    rep.checks.push_back(flag_check(cfg, "majorana-reality:scan", "majorana-reality",
                                    ok, "'G' is the only fully real group",
                                    got.empty() ? "none" : got));
  }

  return rep;
}

Report run_spatial_battery(const RunConfig& cfg) {
  Report rep;
  rep.battery = "spatial";
  rep.config = cfg;
  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);

  // samples kept clear of the axis and of the half-angle branch cut
  auto sample_vec = [&](auto& out) {
    const double rho = 0.3 + 1.7 * unif(rng);
    const double gamma = (2.0 * unif(rng) - 1.0) * 0.9 * M_PI;
    const double z = (2.0 * unif(rng) - 1.0) * 2.0;
    out = {rho * std::cos(gamma), rho * std::sin(gamma), z};
  };

  const int n_norm = std::max(1, cfg.samples) * 100;
  {
    double worst = 0;
    for (int i = 0; i < n_norm; ++i) {
      PseudoVector3 v;
      sample_vec(v);
      const SpatialSpinor s = xi_from_pseudovector(v);
      const double sum = std::norm(s.c1) + std::norm(s.c2);
      const double diff = std::norm(s.c1) - std::norm(s.c2);
      worst = std::max(worst, std::abs(sum - 2 * v.norm()));
      worst = std::max(worst, std::abs(diff - 2 * v.a3));
    }
    rep.checks.push_back(residual_check(cfg, "spinor-norm-identities",
                                        "spinor-norm-identities", worst, 1e-10));
  }

  const int n_rt = std::max(1, cfg.samples) * 10;
  {
    double worst = 0;
    for (int i = 0; i < n_rt; ++i) {
      PseudoVector3 v;
      sample_vec(v);
      const auto d = reconstruct_pseudovector(xi_from_pseudovector(v));
      worst = std::max({worst, std::abs(d.a_j[0] - v.a1), std::abs(d.a_j[1] - v.a2),
                        std::abs(d.a_j[2] - v.a3), std::abs(d.a - v.norm())});
    }
    rep.checks.push_back(residual_check(cfg, "pseudovector-roundtrip",
                                        "pseudovector-roundtrip", worst, 1e-10));
  }
  {
    double worst = 0;
    for (int i = 0; i < n_rt; ++i) {
      ProperVector3 v;
      sample_vec(v);
      const auto d =
          reconstruct_vector(eta_from_vector(v, v.b3 < 0 ? -1 : +1));
      worst = std::max({worst, std::abs(d.b_j[0] - v.b1), std::abs(d.b_j[1] - v.b2),
                        std::abs(d.b_j[2] - v.b3)});
    }
    rep.checks.push_back(
        residual_check(cfg, "vector-roundtrip", "vector-roundtrip", worst, 1e-10));
  }

  const int n_fd = std::max(1, cfg.samples) * 10;
  {
    double worst = 0;
    for (int i = 0; i < n_fd; ++i) {
      PseudoVector3 v;
      sample_vec(v);
      const double phi = 2 * M_PI * unif(rng);
      const double n1 = std::cos(phi), n2 = std::sin(phi);
      const auto an = dir_deriv_xi(v, n1, n2);
      const double h = 1e-5 * std::max(1.0, v.norm());
      auto at = [&](double t) {
        return xi_from_pseudovector({v.a1 + t * n1, v.a2 + t * n2, v.a3});
      };
      const auto sp = at(h), sm = at(-h);
      const Complex fd1 = (sp.c1 - sm.c1) / (2 * h);
      const Complex fd2 = (sp.c2 - sm.c2) / (2 * h);
      const double scale =
          std::max({std::abs(an[0]), std::abs(an[1]), 1e-12});
      worst = std::max(worst,
                       std::max(std::abs(fd1 - an[0]), std::abs(fd2 - an[1])) / scale);
    }
    rep.checks.push_back(residual_check(cfg, "directional-derivative-xi",
                                        "directional-derivative-xi", worst, 1e-6));
  }
  {
    double worst = 0;
    for (int i = 0; i < n_fd; ++i) {
      ProperVector3 v;
      sample_vec(v);
      const double phi = 2 * M_PI * unif(rng);
      const double n1 = std::cos(phi), n2 = std::sin(phi);
      const auto an = dir_deriv_eta(v, n1, n2);
      const double h = 1e-5 * std::max(1.0, v.norm());
      const int hs = v.b3 < 0 ? -1 : +1;
      auto at = [&](double t) {
        return eta_from_vector({v.b1 + t * n1, v.b2 + t * n2, v.b3}, hs);
      };
      const auto sp = at(h), sm = at(-h);
      const Complex fd1 = (sp.c1 - sm.c1) / (2 * h);
      const Complex fd2 = (sp.c2 - sm.c2) / (2 * h);
      const double scale =
          std::max({std::abs(an[0]), std::abs(an[1]), 1e-12});
      worst = std::max(worst,
                       std::max(std::abs(fd1 - an[0]), std::abs(fd2 - an[1])) / scale);
    }
    rep.checks.push_back(residual_check(cfg, "directional-derivative-eta",
                                        "directional-derivative-eta", worst, 1e-6));
  }

  {
    double worst = 0;
    for (int i = 0; i < std::max(1, cfg.samples); ++i) {
      PseudoVector3 v;
      sample_vec(v);
      const auto r = cauchy_riemann_residual(v);
      for (double x : r) worst = std::max(worst, x);
    }
    rep.checks.push_back(
        residual_check(cfg, "cauchy-riemann", "cauchy-riemann", worst, 1e-5));
  }

  {
    double worst = 0, map_worst = 0;
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int i = 0; i < n_rt; ++i) {
      SpatialSpinor s;
      s.c1 = {gauss(rng), gauss(rng)};
      s.c2 = {gauss(rng), gauss(rng)};
      s.model = (i % 2 == 0) ? SpinorModel::Xi : SpinorModel::Eta;
      const SpatialSpinor back = transmute(transmute(s));
      worst = std::max(worst, std::abs(back.c1 - s.c1) + std::abs(back.c2 - s.c2));
    }
    for (int i = 0; i < std::max(1, cfg.samples); ++i) {
      PseudoVector3 v;
      sample_vec(v);
      const auto d = reconstruct_vector(transmute(xi_from_pseudovector(v)));
      map_worst = std::max({map_worst, std::abs(d.b_j[0] - v.a1),
                            std::abs(d.b_j[1] - v.a2), std::abs(d.b_j[2] - v.a3)});
    }
    rep.checks.push_back(residual_check(cfg, "transmutation:involution", "transmutation",
                                        worst, 1e-12));
    rep.checks.push_back(residual_check(cfg, "transmutation:model-map", "transmutation",
                                        map_worst, 1e-10));
  }

  for (ChartTag tag :
       {ChartTag::ParabolicCylindrical, ChartTag::Parabolic, ChartTag::Spherical}) {
    const Chart& c = chart(tag);
    double worst = 0, flip_worst = 0, restore_worst = 0;
    for (int i = 0; i < std::max(1, cfg.samples); ++i) {
      std::array<double, 3> y;
      switch (tag) {
        case ChartTag::ParabolicCylindrical:
          y = {(2 * unif(rng) - 1) * 2, (2 * unif(rng) - 1) * 2,
               (2 * unif(rng) - 1) * 2};
          if (std::abs(y[0]) + std::abs(y[1]) < 0.2) y[0] += 0.5;
          break;
        case ChartTag::Parabolic:
          y = {0.2 + 1.8 * unif(rng), 0.2 + 1.8 * unif(rng),
               (2 * unif(rng) - 1) * 2 * M_PI};
          break;
        default:
          y = {0.2 + 1.8 * unif(rng), 0.1 + (M_PI - 0.2) * unif(rng),
               (2 * unif(rng) - 1) * 2 * M_PI};
          break;
      }
      const SpatialSpinor sc = spinor_in_chart(c, SpinorModel::Xi, y);
      const auto x = chart_to_cartesian(c, y);
      const SpatialSpinor sx = xi_from_pseudovector({x[0], x[1], x[2]});
      const double plus = std::abs(sc.c1 - sx.c1) + std::abs(sc.c2 - sx.c2);
      const double minus = std::abs(sc.c1 + sx.c1) + std::abs(sc.c2 + sx.c2);
      worst = std::max(worst, std::min(plus, minus));

      const auto y2 = doubled_partner(c, y);
      const SpatialSpinor s2 = spinor_in_chart(c, SpinorModel::Xi, y2);
      flip_worst = std::max(flip_worst,
                            std::abs(s2.c1 + sc.c1) + std::abs(s2.c2 + sc.c2));
      const SpatialSpinor s4 =
          spinor_in_chart(c, SpinorModel::Xi, doubled_partner(c, y2));
      restore_worst = std::max(restore_worst,
                               std::abs(s4.c1 - sc.c1) + std::abs(s4.c2 - sc.c2));
    }
    rep.checks.push_back(residual_check(cfg, "chart-consistency:" + to_string(tag),
                                        "chart-consistency", worst, 1e-10));
    rep.checks.push_back(residual_check(
        cfg, "double-cover-periodicity:" + to_string(tag), "double-cover-periodicity",
        std::max(flip_worst, restore_worst), 1e-12));
  }

  {
    const Chart& c = chart(ChartTag::ParabolicCylindrical);
    double worst = 0;
    for (int i = 0; i < n_fd; ++i) {
      std::array<double, 3> y = {(2 * unif(rng) - 1) * 2, (2 * unif(rng) - 1) * 2,
                                 (2 * unif(rng) - 1) * 2};
      if (y[0] * y[0] + y[1] * y[1] < 0.25) y[0] += 1.0;
      const double phi = 2 * M_PI * unif(rng);
      const SpinorModel model = (i % 2 == 0) ? SpinorModel::Xi : SpinorModel::Eta;
      worst = std::max(worst, curvilinear_ode_residual(c, model, y, std::cos(phi),
                                                       std::sin(phi)));
    }
    rep.checks.push_back(residual_check(cfg, "chart-ode", "chart-ode", worst, 1e-6));
  }

  if (!cfg.dump_field_path.empty()) {
    ChartTag tag = ChartTag::ParabolicCylindrical;
    if (cfg.chart == "parabolic") tag = ChartTag::Parabolic;
    else if (cfg.chart == "spherical") tag = ChartTag::Spherical;
    else if (cfg.chart == "cartesian") tag = ChartTag::Cartesian;
    std::ofstream os(cfg.dump_field_path);
    const int skipped = dump_field_csv(chart(tag), SpinorModel::Xi, 21, os);
    rep.checks.push_back(flag_check(cfg, "field-dump", "plumbing", bool(os),
                                    "csv written",
                                    "skipped " + std::to_string(skipped) +
                                        " on-axis points"));
  }

  return rep;
}

Report run_kfg_battery(const RunConfig& cfg) {
  Report rep;
  rep.battery = "kfg";
  rep.config = cfg;
  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);

  if (cfg.truncation < 24 || cfg.truncation > 160) {
    throw std::invalid_argument("kfg battery: series truncation must be in [24, 160]");
  }
  const SeparationParams params = cfg.schrodinger ? schrodinger_params(cfg.alpha)
                                                  : default_params(cfg.alpha);
  const double alpha = params.alpha();
  const int N = cfg.truncation;

  {
    double worst = 0, jac = 0;
    for (int i = 0; i < std::max(1, cfg.samples); ++i) {
      const double u = (2 * unif(rng) - 1) * 3, v = (2 * unif(rng) - 1) * 3;
      const auto xy = uv_to_xy(u, v);
      const auto uv = xy_to_uv(xy[0], xy[1]);
      const auto xy2 = uv_to_xy(uv[0], uv[1]);
      worst = std::max({worst, std::abs(xy2[0] - xy[0]), std::abs(xy2[1] - xy[1])});
      jac = std::max(jac, metric_factor_residual(u, v));
    }
    rep.checks.push_back(
        residual_check(cfg, "chart-roundtrip", "chart-jacobian", worst, 1e-12));
    rep.checks.push_back(
        residual_check(cfg, "chart-jacobian", "chart-jacobian", jac, 1e-8));
  }

  {
    bool ok = true;
    for (double a : {0.0, 0.7, 1.0, 2.0}) {
      const SeriesSolution e = series_even(a, 8);
      const SeriesSolution o = series_odd(a, 9);
      ok = ok && e.a_coeffs[1] == a && e.a_coeffs[2] == a * a - 0.5;
      ok = ok && o.a_coeffs[1] == a && o.a_coeffs[2] == a * a - 1.5;
    }
    const SeriesSolution e0 = series_even(0.0, 8);
    ok = ok && e0.a_coeffs[1] == 0.0 && e0.a_coeffs[2] == -0.5 && e0.a_coeffs[3] == 0.0;
    rep.checks.push_back(flag_check(cfg, "series-recurrence", "series-recurrence", ok,
                                    "a4 = alpha^2 - 1/2, a5 = alpha^2 - 3/2",
                                    ok ? "exact" : "mismatch"));
  }

  {
    // dual route: raw coefficient recurrence, independent of the
    // factorial-scaled one used by the library
    double worst = 0;
    for (Parity par : {Parity::Even, Parity::Odd}) {
      const SeriesSolution s = par == Parity::Even ? series_even(alpha, N)
                                                   : series_odd(alpha, N);
      const int start = par == Parity::Even ? 0 : 1;
      std::vector<double> c = {1.0};
      for (int k = start; k + 2 <= s.truncation; k += 2) {
        const double ck = c.back();
        const double ckm2 = c.size() >= 2 ? c[c.size() - 2] : 0.0;
        c.push_back((alpha * ck - 0.25 * ckm2) / ((k + 2) * (k + 1)));
      }
      for (double xi : {0.5, 1.0, 2.0}) {
        double acc = 0, pw = par == Parity::Even ? 1.0 : xi;
        for (double ck : c) {
          acc += ck * pw;
          pw *= xi * xi;
        }
        worst = std::max(worst, std::abs(acc - s.eval(xi)));
      }
    }
    rep.checks.push_back(
        residual_check(cfg, "series-duality", "series-duality", worst, 1e-12));
  }

  {
    double worst = 0;
    for (Parity par : {Parity::Even, Parity::Odd}) {
      for (double a : {alpha, -alpha}) {
        const SeriesSolution s =
            par == Parity::Even ? series_even(a, N) : series_odd(a, N);
        // |xi| <= 3 at the default truncation; coarser runs stay inside
        // their validated radius
        const double top = std::min(3.0, 0.95 * s.radius);
        for (double xi = -top; xi <= top; xi += top / 12.0) {
          worst = std::max(worst, ode_residual(s, xi).residual);
        }
      }
    }
    rep.checks.push_back(residual_check(cfg, "series-ode-residual",
                                        "series-ode-residual", worst, 1e-8));
  }

  std::array<WaveFunction, 4> waves;
  for (int c = 0; c < 4; ++c) waves[size_t(c)] = wavefunction(all_classes()[size_t(c)], params, N);

  {
    bool ok = true;
    ok = ok && parity_eigenvalue(waves[0]) == +1 && parity_eigenvalue(waves[1]) == +1;
    ok = ok && parity_eigenvalue(waves[2]) == -1 && parity_eigenvalue(waves[3]) == -1;
    rep.checks.push_back(flag_check(cfg, "parity-operator", "parity-operator", ok,
                                    "+1 for ++/--, -1 for +-/-+",
                                    ok ? "match" : "mismatch"));
    ok = waves[0].eval_canonical(0, 0) != 0.0 && waves[1].eval_canonical(0, 0) == 0.0;
    rep.checks.push_back(flag_check(cfg, "origin-values", "boundary-behavior", ok,
                                    "Phi_++(0,0) != 0, Phi_--(0,0) = 0",
                                    ok ? "match" : "mismatch"));
  }

  {
    double worst = 0;
    bool admissible_ok = true;
    for (const auto& w : waves) {
      const auto b = boundary_behavior_check(w);
      worst = std::max(worst, b.max_residual);
      admissible_ok = admissible_ok &&
                      (b.vector_admissible ==
                       (w.cls == ParityClass::PP || w.cls == ParityClass::MM));
    }
    CheckRecord c = residual_check(cfg, "boundary-behavior", "boundary-behavior",
                                   worst, 1e-12, "vector-admissible = {++,--}");
    c.pass = c.pass && admissible_ok;
    c.got = admissible_ok ? "match" : "classification mismatch";
    rep.checks.push_back(c);
  }

  {
    double worst = 0;
    for (const auto& w : waves) {
      const double upper =
          std::min(1.4, 0.75 * std::min(w.u_series.radius, w.v_series.radius) /
                            params.scale());
      for (int i = 0; i < std::min(std::max(1, cfg.samples), 25); ++i) {
        const double u = 0.4 + (upper - 0.4) * unif(rng);
        const double v = 0.4 + (upper - 0.4) * unif(rng);
        const double phi = w.eval(u, v);
        if (std::abs(phi) < 5e-2) continue;
        const double auv = a_operator_apply(w, u, v, OperatorForm::ParabolicUV);
        const double axy = a_operator_apply(w, u, v, OperatorForm::Cartesian);
        // relative to the eigenvalue scale, but never finer than the
        // solution scale itself (a = 0 is the annihilation case)
        const double denom = std::max(std::abs(params.a), 1.0) * std::abs(phi);
        worst = std::max(worst, std::abs(auv - params.a * phi) / denom);
        worst = std::max(worst, std::abs(axy - params.a * phi) / denom);
      }
    }
    rep.checks.push_back(residual_check(cfg, "diagonal-operator", "diagonal-operator",
                                        worst, 1e-6));
  }

  {
    QuadratureSpec spec{cfg.half_width, cfg.nodes};
    const auto r = orthogonality_integrals(spec, params, N);
    CheckRecord c = residual_check(cfg, "orthogonality", "orthogonality",
                                   r.max_relative(), 1e-10);
    nlohmann::json data;
    data["integrals"] = r.integrals;
    data["diagonal_norms"] = r.diagonal_norms;
    data["half_plane_norms"] = r.half_plane_norms;
    c.data = data.dump();
    rep.checks.push_back(c);
    const bool positive = r.scale() > 0 && r.half_plane_norms[0] > 0;
    rep.checks.push_back(flag_check(cfg, "diagonal-norms-positive", "orthogonality",
                                    positive, "positive", positive ? "positive" : "zero"));
  }

  {
    QuadratureSpec spec{cfg.half_width, cfg.nodes};
    for (Coordinate coord :
         {Coordinate::X, Coordinate::Y, Coordinate::U, Coordinate::V}) {
      if (!cfg.table_coord.empty() && to_string(coord) != cfg.table_coord) continue;
      for (SpaceModel space : {SpaceModel::Vector, SpaceModel::Spinor}) {
        if (!cfg.table_space.empty() && to_string(space) != cfg.table_space) continue;
        const auto table = matrix_elements(coord, space, spec, params, N);
        const auto want = expected_selection_pattern(coord, space);
        bool ok = true;
        std::string got, expected;
        nlohmann::json grid = nlohmann::json::array();
        for (int i = 0; i < table.dim; ++i) {
          nlohmann::json row = nlohmann::json::array();
          for (int j = 0; j < table.dim; ++j) {
            ok = ok && table.flags[size_t(i)][size_t(j)] == want[size_t(i)][size_t(j)];
            got += table.flags[size_t(i)][size_t(j)] == 1 ? '1' : '0';
            expected += want[size_t(i)][size_t(j)] == 1 ? '1' : '0';
            row.push_back({{"value", table.values[size_t(i)][size_t(j)]},
                           {"flag", table.flags[size_t(i)][size_t(j)]}});
          }
          if (i + 1 < table.dim) {
            got += '/';
            expected += '/';
          }
          grid.push_back(std::move(row));
        }
        CheckRecord c = flag_check(
            cfg, "selection-rules:" + to_string(coord) + "/" + to_string(space),
            "selection-rules", ok, expected, got);
        nlohmann::json data;
        data["coordinate"] = to_string(coord);
        data["space"] = to_string(space);
        data["grid"] = std::move(grid);
        c.data = data.dump();
        rep.checks.push_back(c);
      }
    }
  }

  {
    SeparationParams s;
    s.m = 1.0;
    s.p = 0.0;
    s.epsilon = 0.5;
    s.equation = WaveEquation::Schroedinger;
    const bool ok = std::abs(s.lambda2() - 1.0) < 1e-15;
    rep.checks.push_back(flag_check(cfg, "schrodinger-mapping", "schrodinger-variant",
                                    ok, "lambda^2 = 1 at m=1, p=0, eps=1/2",
                                    "lambda^2 = " + fmt(s.lambda2())));
  }

  if (!cfg.dump_phi_path.empty()) {
    std::ofstream os(cfg.dump_phi_path);
    dump_phi_csv(waves[0], cfg.half_width, 41, os);
    rep.checks.push_back(flag_check(cfg, "phi-dump", "plumbing", bool(os),
                                    "csv written", "csv written"));
  }

  return rep;
}

}  // namespace spincover
