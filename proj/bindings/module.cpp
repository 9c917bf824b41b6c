#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <random>

#include "spincover/batteries.hpp"
#include "spincover/kfg.hpp"
#include "spincover/lorentz_cover.hpp"
#include "spincover/spatial_spinor.hpp"

namespace py = pybind11;
using namespace spincover;

namespace {

SpinorParam param_from_tuple(const std::array<Complex, 4>& k) {
  return {k[0], k[1], k[2], k[3]};
}

std::array<Complex, 4> tuple_from_param(const SpinorParam& k) {
  return {k.k0, k.k1, k.k2, k.k3};
}

}  // namespace

PYBIND11_MODULE(spincover, m) {
  m.doc() = "spinor coverings of the full Lorentz group, spatial spinors, and "
            "separated wave solutions in parabolic cylindrical coordinates";

  m.def("compose", [](const std::array<Complex, 4>& a, const std::array<Complex, 4>& b) {
    return tuple_from_param(spinor_compose(param_from_tuple(a), param_from_tuple(b)));
  });
  m.def("b_matrix", [](const std::array<Complex, 4>& k) {
    return Matrix2(b_matrix(param_from_tuple(k)));
  });
  m.def("bispinor", [](const std::array<Complex, 4>& k) {
    return Matrix4(bispinor(param_from_tuple(k)));
  });
  m.def("lorentz", [](const std::array<Complex, 4>& k) {
    return RealMatrix4(lorentz_from_spinor(param_from_tuple(k)));
  });
  m.def("random_param", [](std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return tuple_from_param(random_spinor_param(rng));
  });

  m.def("generator", [](const std::string& name) {
    GenTag t;
    if (name == "M") t = GenTag::M;
    else if (name == "M'") t = GenTag::Mp;
    else if (name == "N") t = GenTag::N;
    else if (name == "'N") t = GenTag::Np;
    else throw std::invalid_argument("generator name must be M, M', N or 'N");
    return Matrix4(generator_matrix(t));
  });
  m.def("gamma", [](int a, const std::string& basis) {
    const DiracBasis& b =
        dirac_basis(basis == "majorana" ? DiracTag::Majorana : DiracTag::Weyl);
    return Matrix4(b.gamma.at(static_cast<size_t>(a)));
  });

  m.def("xi_from_pseudovector",
        [](double a1, double a2, double a3, double mute) {
          const SpatialSpinor s = xi_from_pseudovector({a1, a2, a3}, mute);
          return std::make_pair(s.c1, s.c2);
        },
        py::arg("a1"), py::arg("a2"), py::arg("a3"), py::arg("mute_angle") = 0.0);
  m.def("eta_from_vector", [](double b1, double b2, double b3, int halfspace) {
    const SpatialSpinor s = eta_from_vector({b1, b2, b3}, halfspace);
    return std::make_pair(s.c1, s.c2);
  });
  m.def("reconstruct_pseudovector", [](Complex c1, Complex c2) {
    SpatialSpinor s;
    s.c1 = c1;
    s.c2 = c2;
    s.model = SpinorModel::Xi;
    const auto d = reconstruct_pseudovector(s);
    return std::make_pair(d.a, d.a_j);
  });
  m.def("transmute", [](Complex c1, Complex c2, const std::string& model) {
    SpatialSpinor s;
    s.c1 = c1;
    s.c2 = c2;
    s.model = model == "eta" ? SpinorModel::Eta : SpinorModel::Xi;
    const SpatialSpinor t = transmute(s);
    return std::make_pair(t.c1, t.c2);
  });

  m.def("series_even_coeffs", [](double alpha, int n) {
    return series_even(alpha, n).a_coeffs;
  });
  m.def("series_odd_coeffs", [](double alpha, int n) {
    return series_odd(alpha, n).a_coeffs;
  });
  m.def("series_eval", [](const std::string& parity, double alpha, int n, double xi) {
    const SeriesSolution s =
        parity == "odd" ? series_odd(alpha, n) : series_even(alpha, n);
    return s.eval(xi);
  });
  m.def("wavefunction_eval",
        [](const std::string& cls, double alpha, double u, double v, int n) {
          ParityClass c;
          if (cls == "++") c = ParityClass::PP;
          else if (cls == "--") c = ParityClass::MM;
          else if (cls == "+-") c = ParityClass::PM;
          else if (cls == "-+") c = ParityClass::MP;
          else throw std::invalid_argument("class must be ++, --, +- or -+");
          return wavefunction(c, default_params(alpha), n).eval_canonical(u, v);
        },
        py::arg("cls"), py::arg("alpha"), py::arg("u"), py::arg("v"),
        py::arg("n") = 60);
  m.def("orthogonality",
        [](double alpha, double half_width, int nodes) {
          QuadratureSpec spec{half_width, nodes};
          const auto r = orthogonality_integrals(spec, default_params(alpha));
          return std::make_tuple(r.integrals, r.diagonal_norms, r.max_relative());
        },
        py::arg("alpha") = 0.7, py::arg("half_width") = 4.0, py::arg("nodes") = 200);
  m.def("selection_table",
        [](const std::string& coord, const std::string& space, double alpha,
           double half_width, int nodes) {
          Coordinate c;
          if (coord == "x") c = Coordinate::X;
          else if (coord == "y") c = Coordinate::Y;
          else if (coord == "u") c = Coordinate::U;
          else if (coord == "v") c = Coordinate::V;
          else throw std::invalid_argument("coordinate must be x, y, u or v");
          const SpaceModel s =
              space == "vector" ? SpaceModel::Vector : SpaceModel::Spinor;
          QuadratureSpec spec{half_width, nodes};
          const auto t = matrix_elements(c, s, spec, default_params(alpha));
          return std::make_tuple(t.dim, t.values, t.flags);
        },
        py::arg("coord"), py::arg("space"), py::arg("alpha") = 0.7,
        py::arg("half_width") = 4.0, py::arg("nodes") = 200);

  m.def("run_battery",
        [](const std::string& name, std::uint64_t seed, int samples) {
          RunConfig cfg;
          cfg.seed = seed;
          cfg.samples = samples;
          cfg.output = "json";
          Report rep;
          if (name == "verify-groups") rep = run_group_battery(cfg);
          else if (name == "spatial") rep = run_spatial_battery(cfg);
          else if (name == "kfg") rep = run_kfg_battery(cfg);
          else throw std::invalid_argument("battery must be verify-groups, spatial or kfg");
          return rep.to_json();
        },
        py::arg("name"), py::arg("seed") = 1, py::arg("samples") = 50);
}
