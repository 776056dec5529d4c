#include <pybind11/eigen.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "sipot/acceptance.hpp"
#include "sipot/catalog.hpp"
#include "sipot/defaults.hpp"
#include "sipot/errors.hpp"
#include "sipot/ladder.hpp"
#include "sipot/oracle.hpp"
#include "sipot/pct.hpp"
#include "sipot/spectrum.hpp"
#include "sipot/version.hpp"

namespace py = pybind11;
using namespace sipot;

namespace {

using Params = std::map<std::string, double>;
using Array = py::array_t<double>;

Array to_array(std::span<const double> v) {
  Array out(static_cast<py::ssize_t>(v.size()));
  std::copy(v.begin(), v.end(), out.mutable_data());
  return out;
}

py::dict spectrum_dict(const Spectrum& s) {
  py::dict d;
  std::vector<int> levels;
  for (const auto& e : s.entries()) levels.push_back(e.n);
  d["n"] = levels;
  d["energies"] = s.energies();
  d["provenance"] = to_string(s.provenance());
  d["cutoff"] = s.cutoff() ? py::cast(*s.cutoff()) : py::none();
  return d;
}

Spectrum spectrum_from(const std::vector<double>& energies, Provenance p) {
  std::vector<SpectrumEntry> entries;
  for (std::size_t n = 0; n < energies.size(); ++n) entries.push_back({static_cast<int>(n), energies[n]});
  return {std::move(entries), p};
}

// Elementwise f over an array of any shape.
template <class F>
Array map_array(const Array& in, F f) {
  const auto a = py::array_t<double, py::array::c_style | py::array::forcecast>::ensure(in);
  Array out(std::vector<py::ssize_t>(a.shape(), a.shape() + a.ndim()));
  const double* src = a.data();
  double* dst = out.mutable_data();
  for (py::ssize_t i = 0; i < a.size(); ++i) dst[i] = f(src[i]);
  return out;
}

// "coulomb(e2=1, l=0)" -> "coulomb"
std::string family(const std::string& label) { return label.substr(0, label.find('(')); }

py::dict check_dict(const acceptance::Check& c) {
  py::dict d;
  d["name"] = c.name;
  d["value"] = c.value;
  d["limit"] = c.limit;
  d["must_exceed"] = c.must_exceed;
  d["pass"] = c.pass;
  d["detail"] = c.detail;
  return d;
}

py::dict criterion_dict(const acceptance::CriterionResult& r) {
  py::dict d;
  d["id"] = r.id;
  d["name"] = r.name;
  d["title"] = r.title;
  d["pass"] = r.pass();
  d["seconds"] = r.seconds;
  d["error"] = r.error;
  py::list checks;
  for (const auto& c : r.checks) checks.append(check_dict(c));
  d["checks"] = checks;
  d["summary"] = acceptance::summary_line(r);
  return d;
}

}  // namespace

PYBIND11_MODULE(_sipot, m) {
  m.doc() = "Shape-invariant potentials: algebraic spectra, ladder algebras, point canonical maps";
  m.attr("__version__") = version;

  auto base = py::register_exception<Error>(m, "SipotError", PyExc_RuntimeError);
  py::register_exception<ArgumentError>(m, "ArgumentError", base.ptr());
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<NoBoundStateError>(m, "NoBoundStateError", base.ptr());
  py::register_exception<UnsupportedParameterError>(m, "UnsupportedParameterError", base.ptr());
  py::register_exception<SingularMapError>(m, "SingularMapError", base.ptr());
  py::register_exception<TruncationTooLargeError>(m, "TruncationTooLargeError", base.ptr());
  py::register_exception<LadderExhaustedError>(m, "LadderExhaustedError", base.ptr());

  py::class_<DomainSpec>(m, "DomainSpec")
      .def_static("full_line", &DomainSpec::full_line)
      .def_static("half_line", &DomainSpec::half_line)
      .def_static("open_interval", &DomainSpec::open_interval, py::arg("lower"), py::arg("upper"))
      .def_property_readonly("kind", [](const DomainSpec& d) { return to_string(d.kind); })
      .def_readonly("lower", &DomainSpec::lower)
      .def_readonly("upper", &DomainSpec::upper)
      .def("is_interior", &DomainSpec::is_interior);

  py::class_<Grid>(m, "Grid")
      .def_static("uniform", &Grid::uniform, py::arg("first"), py::arg("last"), py::arg("n"), py::arg("domain"))
      .def_static("interior", &Grid::interior, py::arg("lower"), py::arg("upper"), py::arg("n"), py::arg("domain"))
      .def_property_readonly("points", [](const Grid& g) { return to_array(g.points()); })
      .def_property_readonly("spacing", &Grid::spacing)
      .def_property_readonly("domain", &Grid::domain)
      .def("__len__", &Grid::size);

  py::class_<Potential>(m, "Potential")
      .def_property_readonly("label", &Potential::label)
      .def_property_readonly("params", &Potential::params)
      .def_property_readonly("domain", &Potential::domain)
      .def("__call__", [](const Potential& v, double x) { return v(x); })
      .def("__call__", [](const Potential& v, const Array& x) { return map_array(x, [&](double t) { return v(t); }); });

  py::class_<ShapeInvariantModel>(m, "Model")
      .def_property_readonly("name", &ShapeInvariantModel::name)
      .def_property_readonly("e0", &ShapeInvariantModel::e0)
      .def_property_readonly("a0", [](const ShapeInvariantModel& s) { return s.rule().a0(); })
      .def_property_readonly("bound_level_count", &ShapeInvariantModel::bound_level_count)
      .def_property_readonly("potential", &ShapeInvariantModel::potential)
      .def_property_readonly("domain", &ShapeInvariantModel::domain)
      .def("remainder", [](const ShapeInvariantModel& s, int n) { return s.remainder().at(n); }, py::arg("n"),
           "R(a_n)")
      .def(
          "superpotential",
          [](const ShapeInvariantModel& s, const Array& x, double a) {
            return map_array(x, [&](double t) { return s.superpotential().value(t, a); });
          },
          py::arg("x"), py::arg("a"));

  m.def("model", &catalog::model_by_name, py::arg("name"), py::arg("params") = Params{},
        "Shape-invariant model by name ('morse', 'pt1').");
  m.def("potential", &catalog::potential_by_name, py::arg("name"), py::arg("params") = Params{},
        "Potential by name (any catalog entry).");
  m.def("morse_printed_remainder", &catalog::make_morse_printed_remainder, py::arg("b"));
  m.def("model_names", &catalog::model_names);
  m.def("potential_names", &catalog::potential_names);

  m.def("oracle_grid", [](const std::string& name, const DomainSpec& d) { return defaults::oracle_grid(name, d); },
        py::arg("name"), py::arg("domain"));
  m.def("wavefunction_grid", [](const ShapeInvariantModel& s) { return defaults::wavefunction_grid(s); },
        py::arg("model"));

  m.def("algebraic_levels", [](const ShapeInvariantModel& s, int n_max) { return spectrum_dict(algebraic_levels(s, n_max)); },
        py::arg("model"), py::arg("n_max"));
  m.def(
      "eigenstate",
      [](const ShapeInvariantModel& s, int n, const std::optional<Grid>& grid) {
        const auto psi = eigenstate(s, grid ? *grid : defaults::wavefunction_grid(s), n);
        return py::make_tuple(to_array(psi.grid().points()), to_array(psi.values()));
      },
      py::arg("model"), py::arg("n"), py::arg("grid") = py::none(), "(x, psi) of the n-th algebraic eigenstate.");

  m.def(
      "solve_bound_states",
      [](const Potential& v, int k, const std::optional<Grid>& grid, const std::string& name) {
        const Grid g = grid ? *grid : defaults::oracle_grid(name.empty() ? family(v.label()) : name, v.domain());
        const auto r = oracle::solve_bound_states(v, g, k);
        py::dict d = spectrum_dict(r.spectrum);
        d["bound"] = r.bound;
        d["bound_threshold"] = r.bound_threshold;
        d["x"] = to_array(r.grid.points());
        py::list states;
        for (const auto& psi : r.wavefunctions) states.append(to_array(psi.values()));
        d["wavefunctions"] = states;
        return d;
      },
      py::arg("potential"), py::arg("k"), py::arg("grid") = py::none(), py::arg("grid_name") = "",
      "Finite-difference levels. Without a grid, the default grid for `grid_name` (or the potential family) is used.");

  m.def(
      "compare_spectra",
      [](const std::vector<double>& a, const std::vector<double>& b, double rel, double abs) {
        const auto r = oracle::compare_spectra(spectrum_from(a, Provenance::algebraic), spectrum_from(b, Provenance::oracle),
                                               rel, abs);
        py::dict d;
        py::list levels;
        for (const auto& l : r.levels) {
          py::dict e;
          e["n"] = l.n;
          e["first"] = l.first;
          e["second"] = l.second;
          e["deviation"] = l.deviation;
          e["allowed"] = l.allowed;
          e["pass"] = l.pass;
          levels.append(e);
        }
        d["levels"] = levels;
        d["worst_deviation"] = r.worst_deviation;
        d["all_pass"] = r.all_pass;
        d["only_in_first"] = r.only_in_first;
        d["only_in_second"] = r.only_in_second;
        return d;
      },
      py::arg("first"), py::arg("second"), py::arg("rel_tol") = 1e-5, py::arg("abs_tol") = 1e-6);

  m.def(
      "transform_potential",
      [](const Potential& v, double energy, const std::string& map, Array z) {
        const auto pm = pct::builtin_map_by_name(map);
        return map_array(z, [&](double t) { return pct::transform_potential(v, energy, pm, t); });
      },
      py::arg("potential"), py::arg("energy"), py::arg("map"), py::arg("z"),
      "V(f(z)) f'(z)^2 - E f'^2 plus the Schwarzian term, for the built-in map 'exp' or 'logcos'.");
  m.def(
      "fit_image",
      [](const Potential& v, double energy, const std::string& map, const std::vector<double>& fit,
         const std::vector<double>& check) {
        const auto pm = pct::builtin_map_by_name(map);
        const auto r = pct::fit_image(v, energy, pm, pct::image_basis(pm), fit, check);
        py::dict coefficients;
        for (std::size_t i = 0; i < r.names.size(); ++i) coefficients[py::str(r.names[i])] = r.coefficients[i];
        return py::make_tuple(coefficients, r.max_check_error);
      },
      py::arg("potential"), py::arg("energy"), py::arg("map"), py::arg("fit_points"), py::arg("check_points"),
      "Least-squares coefficients of the image in the map's natural basis and the error at the check points.");

  m.def(
      "ladder_matrices",
      [](const ShapeInvariantModel& s, int n_dim, const std::string& convention) {
        const auto c = convention == "before-shift" ? ladder::RemainderConvention::before_shift
                                                    : ladder::RemainderConvention::after_shift;
        const auto rep = ladder::build_rep(s, n_dim, c);
        py::dict d;
        d["b_plus"] = rep.b_plus();
        d["b_minus"] = rep.b_minus();
        d["rho"] = rep.rho();
        d["hamiltonian"] = rep.hamiltonian();
        d["energies"] = rep.energies();
        d["e0"] = rep.e0();
        return d;
      },
      py::arg("model"), py::arg("n_dim"), py::arg("convention") = "after-shift");
  m.def(
      "classify_algebra",
      [](const ShapeInvariantModel& s, int n_dim) {
        const auto r = ladder::classify_algebra(s, n_dim);
        py::dict d;
        d["n_dim"] = r.n_dim;
        d["spacing"] = r.spacing_d;
        d["classification"] = ladder::to_string(r.classification);
        d["k0_scale"] = r.k0_scale;
        d["kpm_scale"] = r.kpm_scale;
        d["bracket_sign"] = r.bracket_sign;
        d["max_interior_residual"] = r.max_interior_residual;
        if (r.has_printed) {
          d["printed_label"] = r.printed_label;
          d["printed_scales_match"] = r.printed_scales_match;
          d["printed_label_matches"] = r.printed_label_matches;
          d["printed_closure_residual"] = r.printed_closure_residual;
        }
        d["note"] = r.note;
        return d;
      },
      py::arg("model"), py::arg("n_dim") = 40);

  m.def("run_criterion", [](int id) { return criterion_dict(acceptance::run_criterion(id)); }, py::arg("id"));
  m.def("run_acceptance", [] {
    py::list out;
    for (const auto& r : acceptance::run_all()) out.append(criterion_dict(r));
    return out;
  });
}
