#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sipot/acceptance.hpp"
#include "sipot/catalog.hpp"
#include "sipot/defaults.hpp"
#include "sipot/errors.hpp"
#include "sipot/ladder.hpp"
#include "sipot/oracle.hpp"
#include "sipot/pct.hpp"
#include "sipot/spectrum.hpp"
#include "sipot/version.hpp"

namespace sipot::cli {

namespace {

using Json = nlohmann::ordered_json;

// Numbers go out rounded to 12 significant digits so reports diff cleanly.
Json num(double x) {
  if (!std::isfinite(x)) return nullptr;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

std::string cell(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

struct Report {
  std::string command;
  Json inputs = Json::object();
  Json results = Json::object();
  Json checks = Json::array();
  Table table;

  void check(const std::string& name, bool pass, std::optional<double> value = std::nullopt,
             std::optional<double> limit = std::nullopt) {
    Json c;
    c["name"] = name;
    c["pass"] = pass;
    if (value) c["value"] = num(*value);
    if (limit) c["limit"] = num(*limit);
    checks.push_back(std::move(c));
  }

  bool all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const Json& c) { return c["pass"].get<bool>(); });
  }

  Json document() const {
    Json doc;
    doc["command"] = command;
    doc["inputs"] = inputs;
    doc["results"] = results;
    doc["checks"] = checks;
    doc["version"] = sipot::version;
    return doc;
  }
};

struct Options {
  std::string output = "json";
  std::string output_file;

  std::string model;
  std::string potential;
  std::map<std::string, double> params;
  std::optional<double> lower;
  std::optional<double> upper;
  std::optional<std::size_t> points;

  int nmax = 4;
  int k = 5;
  int wavefunction = -1;
  std::string remainder = "derived";
  double rel = 1e-5;
  double abs = 1e-6;
  std::string map;
  double energy = 0.0;
  int samples = 50;
  std::optional<double> zmin;
  std::optional<double> zmax;
  int n_dim = 40;
  std::string convention = "after-shift";
  std::vector<int> criteria;
  bool timings = false;
};

const char* const parameter_names[] = {"b", "A", "B", "e2", "l", "strength", "alpha", "beta", "gamma"};

void add_parameters(CLI::App* sub, std::map<std::string, std::optional<double>>& slots) {
  for (const char* name : parameter_names) {
    sub->add_option(std::string("--") + name, slots[name], std::string("model/potential parameter ") + name);
  }
}

void add_grid(CLI::App* sub, Options& o) {
  sub->add_option("--lower", o.lower, "grid lower bound");
  sub->add_option("--upper", o.upper, "grid upper bound");
  sub->add_option("--points", o.points, "number of grid points")->check(CLI::Range(8, 10000000));
}

Json params_json(const std::map<std::string, double>& params) {
  Json j = Json::object();
  for (const auto& [k, v] : params) j[k] = num(v);
  return j;
}

bool has_grid_override(const Options& o) { return o.lower || o.upper || o.points; }

// Overrides complete the default grid: missing bounds or size are taken from it.
Grid override_grid(const Options& o, const Grid& fallback, bool dirichlet_interior) {
  const DomainSpec& domain = fallback.domain();
  const std::size_t n = fallback.size();
  double lo = fallback[0];
  double hi = fallback[n - 1];
  if (dirichlet_interior) {
    const double h = fallback.spacing();
    lo -= h;
    hi += h;
  }
  lo = o.lower.value_or(lo);
  hi = o.upper.value_or(hi);
  const std::size_t points = o.points.value_or(n);
  if (!(lo < hi)) throw ArgumentError("grid lower bound must be below the upper bound");
  return dirichlet_interior ? Grid::interior(lo, hi, points, domain) : Grid::uniform(lo, hi, points, domain);
}

Json grid_json(const Grid& grid) {
  Json j;
  j["first"] = num(grid[0]);
  j["last"] = num(grid[grid.size() - 1]);
  j["points"] = grid.size();
  j["spacing"] = num(grid.spacing());
  return j;
}

ShapeInvariantModel selected_model(const Options& o) {
  ShapeInvariantModel model = catalog::model_by_name(o.model, o.params);
  if (o.remainder == "printed") {
    if (o.model != "morse") throw ArgumentError("--remainder printed applies to morse only");
    model = catalog::make_morse_printed_remainder(model.rule().a0() + 0.5);
  }
  return model;
}

void common_model_inputs(Report& r, const Options& o) {
  r.inputs["model"] = o.model;
  r.inputs["params"] = params_json(o.params);
  if (o.model == "morse") r.inputs["remainder"] = o.remainder;
}

Json levels_json(const Spectrum& s) {
  Json levels = Json::array();
  for (const auto& e : s.entries()) levels.push_back({{"n", e.n}, {"energy", num(e.energy)}});
  return levels;
}

Json energies_json(const Spectrum& s) {
  Json out = Json::array();
  for (const auto& e : s.entries()) out.push_back(num(e.energy));
  return out;
}

Table wavefunction_table(const WaveFunction& psi) {
  Table t{{"x", "psi"}, {}};
  for (std::size_t i = 0; i < psi.size(); ++i) t.rows.push_back({cell(psi.grid()[i]), cell(psi[i])});
  return t;
}

Report spectrum_command(const Options& o) {
  Report r;
  r.command = "spectrum";
  common_model_inputs(r, o);
  r.inputs["nmax"] = o.nmax;
  if (o.nmax < 0) throw ArgumentError("--nmax must be non-negative");
  const ShapeInvariantModel model = selected_model(o);
  const Spectrum s = algebraic_levels(model, o.nmax);
  r.results["label"] = model.potential().label();
  r.results["provenance"] = to_string(s.provenance());
  r.results["levels"] = levels_json(s);
  r.results["energies"] = energies_json(s);
  r.results["cutoff"] = s.cutoff() ? Json(*s.cutoff()) : Json(nullptr);
  r.table.header = {"n", "energy"};
  for (const auto& e : s.entries()) r.table.rows.push_back({std::to_string(e.n), cell(e.energy)});

  if (o.wavefunction >= 0) {
    const Grid fallback = defaults::wavefunction_grid(model);
    const Grid grid = has_grid_override(o) ? override_grid(o, fallback, false) : fallback;
    const WaveFunction psi = eigenstate(model, grid, o.wavefunction);
    const double energy = model.e0() + model.remainder().partial_sum(o.wavefunction);
    const double residual = pct::residual_check(model.potential(), energy, psi);
    r.inputs["wavefunction"] = o.wavefunction;
    r.inputs["grid"] = grid_json(grid);
    r.results["wavefunction"] = {{"n", o.wavefunction},
                                 {"energy", num(energy)},
                                 {"norm", num(psi.norm())},
                                 {"nodes", node_count(psi)},
                                 {"residual", num(residual)}};
    r.table = wavefunction_table(psi);
  }
  return r;
}

Report oracle_command(const Options& o) {
  Report r;
  r.command = "oracle";
  r.inputs["potential"] = o.potential;
  r.inputs["params"] = params_json(o.params);
  r.inputs["k"] = o.k;
  const Potential v = catalog::potential_by_name(o.potential, o.params);
  const Grid fallback = defaults::oracle_grid(o.potential, v.domain());
  const Grid grid = has_grid_override(o) ? override_grid(o, fallback, true) : fallback;
  r.inputs["grid"] = grid_json(grid);
  const auto res = oracle::solve_bound_states(v, grid, o.k);
  Json levels = Json::array();
  r.table.header = {"n", "energy", "bound"};
  for (std::size_t i = 0; i < res.spectrum.size(); ++i) {
    const auto& e = res.spectrum.entries()[i];
    const bool bound = res.bound[i];
    levels.push_back({{"n", e.n}, {"energy", num(e.energy)}, {"bound", bound}});
    r.table.rows.push_back({std::to_string(e.n), cell(e.energy), bound ? "true" : "false"});
  }
  r.results["label"] = v.label();
  r.results["provenance"] = to_string(res.spectrum.provenance());
  r.results["bound_threshold"] = num(res.bound_threshold);
  r.results["levels"] = levels;
  r.results["energies"] = energies_json(res.spectrum);
  if (o.wavefunction >= 0) {
    if (o.wavefunction >= o.k) throw ArgumentError("--wavefunction must be below --k");
    const WaveFunction& psi = res.wavefunctions[static_cast<std::size_t>(o.wavefunction)];
    r.inputs["wavefunction"] = o.wavefunction;
    r.results["wavefunction"] = {{"n", o.wavefunction},
                                 {"energy", num(res.spectrum.entries()[o.wavefunction].energy)},
                                 {"norm", num(psi.norm())},
                                 {"nodes", node_count(psi)}};
    r.table = wavefunction_table(psi);
  }
  return r;
}

Report compare_command(const Options& o) {
  Report r;
  r.command = "compare";
  common_model_inputs(r, o);
  r.inputs["nmax"] = o.nmax;
  r.inputs["rel_tol"] = num(o.rel);
  r.inputs["abs_tol"] = num(o.abs);
  if (o.nmax < 0) throw ArgumentError("--nmax must be non-negative");
  const ShapeInvariantModel model = selected_model(o);
  const Spectrum algebraic = algebraic_levels(model, o.nmax);
  const Grid fallback = defaults::oracle_grid(o.model, model.domain());
  const Grid grid = has_grid_override(o) ? override_grid(o, fallback, true) : fallback;
  r.inputs["grid"] = grid_json(grid);
  const auto solved = oracle::solve_bound_states(model.potential(), grid, o.nmax + 1);
  const auto report = oracle::compare_spectra(algebraic, solved.spectrum, o.rel, o.abs);
  Json levels = Json::array();
  r.table.header = {"n", "algebraic", "oracle", "deviation", "allowed", "pass"};
  for (const auto& l : report.levels) {
    levels.push_back({{"n", l.n},
                      {"algebraic", num(l.first)},
                      {"oracle", num(l.second)},
                      {"deviation", num(l.deviation)},
                      {"allowed", num(l.allowed)},
                      {"pass", l.pass}});
    r.table.rows.push_back({std::to_string(l.n), cell(l.first), cell(l.second), cell(l.deviation),
                            cell(l.allowed), l.pass ? "true" : "false"});
    r.check("level-" + std::to_string(l.n), l.pass, l.deviation, l.allowed);
  }
  r.results["levels"] = levels;
  r.results["worst_deviation"] = num(report.worst_deviation);
  r.results["all_pass"] = report.all_pass;
  r.results["only_in_algebraic"] = report.only_in_first;
  r.results["only_in_oracle"] = report.only_in_second;
  return r;
}

// Closed-form image coefficients where they are known, in image_basis order.
std::optional<std::vector<double>> expected_image(const Potential& v, const std::string& name,
                                                  const std::string& map, double energy) {
  const auto& p = v.params();
  if (map == "logcos" && name == "hulthen") {
    const double s = p.at("strength");
    return std::vector<double>{-0.25 * (1.0 + 16.0 * energy), 0.75, 4.0 * (energy - s)};
  }
  if (map == "exp" && (name == "inverse-power" || name == "kratzer" || name == "coulomb")) {
    double alpha = 0.0, beta = 0.0, gamma = 0.0;
    if (name == "coulomb") {
      const double e2 = p.at("e2");
      const double l = p.at("l");
      alpha = e2;
      beta = l * (l + 1.0);
      gamma = e2 * e2 / (4.0 * (l + 1.0) * (l + 1.0));
    } else {
      alpha = p.at("alpha");
      beta = p.at("beta");
      gamma = p.at("gamma");
    }
    return std::vector<double>{gamma - energy, -alpha, beta + 0.25};
  }
  return std::nullopt;
}

Report map_command(const Options& o) {
  Report r;
  r.command = "map";
  r.inputs["potential"] = o.potential;
  r.inputs["params"] = params_json(o.params);
  r.inputs["map"] = o.map;
  r.inputs["energy"] = num(o.energy);
  r.inputs["samples"] = o.samples;
  if (o.samples < 4) throw ArgumentError("--samples must be at least 4");
  const Potential v = catalog::potential_by_name(o.potential, o.params);
  const pct::PCTMap map = pct::builtin_map_by_name(o.map);
  const bool exp_map = o.map == "exp";
  const double z0 = o.zmin.value_or(exp_map ? -3.0 : 0.05);
  const double z1 = o.zmax.value_or(exp_map ? 3.0 : std::numbers::pi / 2.0 - 0.05);
  if (!(z0 < z1)) throw ArgumentError("--zmin must be below --zmax");
  r.inputs["zmin"] = num(z0);
  r.inputs["zmax"] = num(z1);

  std::vector<double> zs, mids;
  const double step = (z1 - z0) / (o.samples - 1);
  for (int i = 0; i < o.samples; ++i) zs.push_back(z0 + step * i);
  for (int i = 0; i + 1 < o.samples; ++i) mids.push_back(z0 + step * (i + 0.5));

  const auto basis = pct::image_basis(map);
  const auto fit = pct::fit_image(v, o.energy, map, basis, zs, mids);
  Json coefficients = Json::object();
  for (std::size_t i = 0; i < fit.names.size(); ++i) coefficients[fit.names[i]] = num(fit.coefficients[i]);
  r.results["label"] = v.label();
  r.results["basis"] = fit.names;
  r.results["coefficients"] = coefficients;
  r.results["max_check_error"] = num(fit.max_check_error);
  r.check("linear-combination", fit.max_check_error <= 1e-10, fit.max_check_error, 1e-10);

  if (const auto expected = expected_image(v, o.potential, o.map, o.energy)) {
    Json closed = Json::object();
    double worst = 0.0;
    for (std::size_t i = 0; i < fit.names.size(); ++i) {
      closed[fit.names[i]] = num((*expected)[i]);
      worst = std::max(worst, std::abs(fit.coefficients[i] - (*expected)[i]));
    }
    r.results["closed_form_coefficients"] = closed;
    r.check("matches-closed-form", worst <= 1e-8, worst, 1e-8);
    if (exp_map) {
      // Constants as printed beside the Morse-form image, for comparison only.
      const double gamma_minus_e = (*expected)[0];
      const double beta = (*expected)[2] - 0.25;
      r.results["printed_form_coefficients"] = {{fit.names[0], num(gamma_minus_e + 0.75)},
                                                {fit.names[1], num((*expected)[1])},
                                                {fit.names[2], num(beta - 0.5)}};
    }
  }

  Json samples = Json::array();
  r.table.header = {"z", "value"};
  for (double z : zs) {
    const double value = pct::transform_potential(v, o.energy, map, z);
    samples.push_back({{"z", num(z)}, {"value", num(value)}});
    r.table.rows.push_back({cell(z), cell(value)});
  }
  r.results["samples"] = samples;
  return r;
}

Report algebra_command(const Options& o) {
  Report r;
  r.command = "algebra";
  common_model_inputs(r, o);
  r.inputs["n"] = o.n_dim;
  r.inputs["convention"] = o.convention;
  const auto convention = o.convention == "before-shift" ? ladder::RemainderConvention::before_shift
                                                         : ladder::RemainderConvention::after_shift;
  const ShapeInvariantModel model = selected_model(o);
  const auto a = ladder::classify_algebra(model, o.n_dim, convention);
  const auto res = ladder::commutator_residuals(ladder::build_rep(model, a.n_dim, convention));
  r.results["n_dim"] = a.n_dim;
  r.results["spacing"] = num(a.spacing_d);
  r.results["classification"] = ladder::to_string(a.classification);
  r.results["k0_scale"] = num(a.k0_scale);
  r.results["kpm_scale"] = num(a.kpm_scale);
  r.results["bracket_sign"] = a.bracket_sign;
  r.results["max_interior_residual"] = num(a.max_interior_residual);
  if (a.has_printed) {
    r.results["printed_label"] = a.printed_label;
    r.results["printed_k0_scale"] = num(a.printed_k0_scale);
    r.results["printed_kpm_scale"] = num(a.printed_kpm_scale);
    r.results["printed_scales_match"] = a.printed_scales_match;
    r.results["printed_label_matches"] = a.printed_label_matches;
    r.results["printed_closure_residual"] = num(a.printed_closure_residual);
  }
  r.results["note"] = a.note;
  r.results["residuals"] = {{"lowering_raising", num(res.lowering_raising)},
                            {"hamiltonian_raising", num(res.hamiltonian_raising)},
                            {"hamiltonian_lowering", num(res.hamiltonian_lowering)},
                            {"hamiltonian_powers_relative", num(res.hamiltonian_powers_relative)},
                            {"remainder_shift", num(res.remainder_shift)},
                            {"double_commutator", num(res.double_commutator)},
                            {"double_commutator_pattern", num(res.double_commutator_pattern)},
                            {"edge", num(res.edge)}};
  const double interior = std::max({res.lowering_raising, res.hamiltonian_raising, res.hamiltonian_lowering,
                                    res.remainder_shift, res.double_commutator_pattern});
  r.check("interior-identities", interior <= 1e-10, interior, 1e-10);
  r.check("closure", a.max_interior_residual <= 1e-10, a.max_interior_residual, 1e-10);

  r.table.header = {"key", "value"};
  for (const auto& [key, value] : r.results.items()) {
    if (value.is_object()) continue;
    r.table.rows.push_back({key, value.is_string() ? value.get<std::string>() : value.dump()});
  }
  for (const auto& [key, value] : r.results["residuals"].items()) {
    r.table.rows.push_back({"residual." + key, value.dump()});
  }
  return r;
}

Report verify_command(const Options& o) {
  Report r;
  r.command = "verify-all";
  std::vector<int> ids = o.criteria.empty() ? acceptance::criterion_ids() : o.criteria;
  r.inputs["criteria"] = ids;
  Json criteria = Json::array();
  r.table.header = {"id", "name", "pass"};
  for (int id : ids) {
    const auto result = acceptance::run_criterion(id);
    Json c;
    c["id"] = result.id;
    c["name"] = result.name;
    c["title"] = result.title;
    c["pass"] = result.pass();
    if (!result.error.empty()) c["error"] = result.error;
    c["time_limit"] = num(result.time_limit);
    if (o.timings) c["seconds"] = num(result.seconds);
    Json checks = Json::array();
    for (const auto& ch : result.checks) {
      Json j;
      j["name"] = ch.name;
      j["pass"] = ch.pass;
      // Wall-clock values are left out unless asked for so reports stay reproducible.
      if (ch.name != "runtime-seconds" || o.timings) j["value"] = num(ch.value);
      j["limit"] = num(ch.limit);
      j["relation"] = ch.must_exceed ? ">" : "<=";
      if (!ch.detail.empty()) j["detail"] = ch.detail;
      checks.push_back(std::move(j));
    }
    c["checks"] = checks;
    criteria.push_back(std::move(c));
    r.check("criterion-" + std::to_string(result.id) + "-" + result.name, result.pass());
    r.table.rows.push_back({std::to_string(result.id), result.name, result.pass() ? "PASS" : "FAIL"});
  }
  r.results["criteria"] = criteria;
  r.results["all_pass"] = r.all_pass();
  return r;
}

std::string render(const Report& r, const std::string& format) {
  std::ostringstream os;
  if (format == "json") {
    os << r.document().dump(2) << "\n";
  } else if (format == "csv") {
    auto line = [&os](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << cells[i];
      os << "\n";
    };
    line(r.table.header);
    for (const auto& row : r.table.rows) line(row);
  } else {
    std::vector<std::size_t> width(r.table.header.size(), 0);
    auto measure = [&width](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size() && i < width.size(); ++i) width[i] = std::max(width[i], cells[i].size());
    };
    measure(r.table.header);
    for (const auto& row : r.table.rows) measure(row);
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) {
        os << (i ? "  " : "") << cells[i];
        if (i + 1 < cells.size()) os << std::string(width[i] - cells[i].size(), ' ');
      }
      os << "\n";
    };
    line(r.table.header);
    for (const auto& row : r.table.rows) line(row);
    for (const auto& c : r.checks) {
      os << "check " << c["name"].get<std::string>() << ": " << (c["pass"].get<bool>() ? "pass" : "FAIL") << "\n";
    }
  }
  return os.str();
}

void write_file(const std::string& text, const Options& o, const std::string& command) {
  std::filesystem::path path;
  if (!o.output_file.empty()) {
    path = o.output_file;
  } else if (const char* dir = std::getenv("SIPOT_OUTPUT_DIR"); dir != nullptr && *dir != '\0') {
    const std::string ext = o.output == "json" ? ".json" : o.output == "csv" ? ".csv" : ".txt";
    path = std::filesystem::path(dir) / (command + ext);
  } else {
    return;
  }
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream file(path);
  if (!file) throw std::runtime_error("cannot write " + path.string());
  file << text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Shape-invariant potentials: algebraic spectra, finite-difference oracle, "
               "point canonical maps and ladder algebras",
               "sipot"};
  app.set_version_flag("--version", std::string(sipot::version));
  app.require_subcommand(1);
  app.fallthrough();

  Options o;
  std::map<std::string, std::optional<double>> slots;
  app.add_option("--output", o.output, "output format")->check(CLI::IsMember({"json", "csv", "table"}));
  app.add_option("--output-file", o.output_file, "also write the report to this file");

  const auto models = catalog::model_names();
  const auto potentials = catalog::potential_names();

  auto* spectrum = app.add_subcommand("spectrum", "algebraic levels (and optionally one eigenfunction)");
  spectrum->add_option("--model", o.model, "shape-invariant model")->required()->check(CLI::IsMember(models));
  add_parameters(spectrum, slots);
  spectrum->add_option("--nmax", o.nmax, "highest level");
  spectrum->add_option("--remainder", o.remainder, "morse remainder form")->check(CLI::IsMember({"derived", "printed"}));
  spectrum->add_option("--wavefunction", o.wavefunction, "emit this eigenfunction (csv: x,psi)");
  add_grid(spectrum, o);

  auto* oracle_cmd = app.add_subcommand("oracle", "finite-difference bound states");
  oracle_cmd->add_option("--potential", o.potential, "catalog potential")->required()->check(CLI::IsMember(potentials));
  add_parameters(oracle_cmd, slots);
  oracle_cmd->add_option("--k", o.k, "number of levels")->check(CLI::PositiveNumber);
  oracle_cmd->add_option("--wavefunction", o.wavefunction, "emit this eigenfunction (csv: x,psi)");
  add_grid(oracle_cmd, o);

  auto* compare = app.add_subcommand("compare", "algebraic levels against the oracle");
  compare->add_option("--model", o.model, "shape-invariant model")->required()->check(CLI::IsMember(models));
  add_parameters(compare, slots);
  compare->add_option("--nmax", o.nmax, "highest level");
  compare->add_option("--remainder", o.remainder, "morse remainder form")->check(CLI::IsMember({"derived", "printed"}));
  compare->add_option("--rel", o.rel, "relative tolerance")->check(CLI::NonNegativeNumber);
  compare->add_option("--abs", o.abs, "absolute tolerance")->check(CLI::NonNegativeNumber);
  add_grid(compare, o);

  auto* map = app.add_subcommand("map", "transformed potential under a built-in map, with fitted coefficients");
  map->add_option("--potential", o.potential, "catalog potential")->required()->check(CLI::IsMember(potentials));
  add_parameters(map, slots);
  map->add_option("--map", o.map, "exp or logcos")->required()->check(CLI::IsMember({"exp", "logcos"}));
  map->add_option("--energy", o.energy, "energy E of the source problem")->required();
  map->add_option("--samples", o.samples, "number of sample points");
  map->add_option("--zmin", o.zmin, "first sample point");
  map->add_option("--zmax", o.zmax, "last sample point");

  auto* algebra = app.add_subcommand("algebra", "truncated ladder identities and algebra classification");
  algebra->add_option("--model", o.model, "shape-invariant model")->required()->check(CLI::IsMember(models));
  add_parameters(algebra, slots);
  algebra->add_option("--n", o.n_dim, "truncation size")->check(CLI::Range(4, 2000));
  algebra->add_option("--remainder", o.remainder, "morse remainder form")->check(CLI::IsMember({"derived", "printed"}));
  algebra->add_option("--convention", o.convention, "remainder operator convention")
      ->check(CLI::IsMember({"after-shift", "before-shift"}));

  auto* verify = app.add_subcommand("verify-all", "run every acceptance criterion");
  verify->add_option("--criterion", o.criteria, "restrict to these criterion ids");
  verify->add_flag("--timings", o.timings, "include wall-clock times");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return ExitCode::ok;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return ExitCode::ok;
  } catch (const CLI::CallForVersion& e) {
    out << sipot::version << "\n";
    return ExitCode::ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return ExitCode::bad_arguments;
  }
  for (const auto& [name, value] : slots) {
    if (value) o.params[name] = *value;
  }
  if (o.params.count("l") && o.params["l"] != std::floor(o.params["l"])) {
    err << "error: --l must be an integer\n";
    return ExitCode::bad_arguments;
  }

  try {
    Report report;
    if (spectrum->parsed()) {
      report = spectrum_command(o);
    } else if (oracle_cmd->parsed()) {
      report = oracle_command(o);
    } else if (compare->parsed()) {
      report = compare_command(o);
    } else if (map->parsed()) {
      report = map_command(o);
    } else if (algebra->parsed()) {
      report = algebra_command(o);
    } else {
      report = verify_command(o);
    }
    const std::string text = render(report, o.output);
    out << text;
    write_file(text, o, report.command);
    return report.all_pass() ? ExitCode::ok : ExitCode::verification_failure;
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << "\n";
    return ExitCode::bad_arguments;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return ExitCode::bad_arguments;
  } catch (const NoBoundStateError& e) {
    err << "error: " << e.what() << "\n";
    return ExitCode::bad_arguments;
  } catch (const UnsupportedParameterError& e) {
    err << "error: " << e.what() << "\n";
    return ExitCode::bad_arguments;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return ExitCode::computation_error;
  }
}

}  // namespace sipot::cli
