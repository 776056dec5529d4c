#include "sipot/pct.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Dense>

#include "sipot/errors.hpp"

namespace sipot::pct {

namespace {

double richardson(const std::function<double(double)>& estimate, double h) {
  return (4.0 * estimate(0.5 * h) - estimate(h)) / 3.0;
}

double reference_point(const DomainSpec& d) {
  switch (d.kind) {
    case DomainKind::full_line:
      return 0.0;
    case DomainKind::half_line:
      return 1.0;
    case DomainKind::open_interval:
      return 0.5 * (d.lower + d.upper);
  }
  return 0.0;
}

}  // namespace

PCTMap::PCTMap(std::string name, Function f, Function f1, Function f2, Function f3,
               Function inverse, DomainSpec source, DomainSpec target, double c)
    : name_(std::move(name)),
      f_(std::move(f)),
      f1_(std::move(f1)),
      f2_(std::move(f2)),
      f3_(std::move(f3)),
      inverse_(std::move(inverse)),
      source_(source),
      target_(target),
      c_(c) {
  if (!f_ || !f1_ || !f2_ || !f3_) throw ArgumentError("map needs f and three derivatives");
  if (!(c_ != 0.0) || !std::isfinite(c_)) throw ArgumentError("map constant c must be finite and nonzero");
}

PCTMap PCTMap::from_function(std::string name, Function f, DomainSpec source, DomainSpec target,
                             double c) {
  const double scale = target.kind == DomainKind::open_interval ? target.upper - target.lower : 1.0;
  // Higher derivatives use wider steps so roundoff stays below the truncation error.
  const double h1 = 1e-4 * scale;
  const double h2 = 1e-3 * scale;
  const double h3 = 5e-3 * scale;
  auto d1 = [f, h1](double z) {
    return richardson([&](double h) { return (f(z + h) - f(z - h)) / (2.0 * h); }, h1);
  };
  auto d2 = [f, h2](double z) {
    return richardson([&](double h) { return (f(z + h) - 2.0 * f(z) + f(z - h)) / (h * h); }, h2);
  };
  auto d3 = [f, h3](double z) {
    return richardson(
        [&](double h) {
          return (f(z + 2.0 * h) - 2.0 * f(z + h) + 2.0 * f(z - h) - f(z - 2.0 * h)) / (2.0 * h * h * h);
        },
        h3);
  };
  PCTMap map(std::move(name), f, d1, d2, d3, {}, source, target, c);
  map.exact_ = false;
  return map;
}

double PCTMap::weight(double z) const { return c_ * std::sqrt(std::abs(f1_(z))); }

double PCTMap::schwarzian_term(double z) const {
  const double d1 = f1_(z);
  if (d1 == 0.0 || !std::isfinite(d1)) {
    throw SingularMapError(name_ + ": f'(" + std::to_string(z) + ") vanishes");
  }
  const double ratio = f2_(z) / d1;
  return 0.5 * (1.5 * ratio * ratio - f3_(z) / d1);
}

bool PCTMap::orientation_reversing() const { return f1_(reference_point(target_)) < 0.0; }

double PCTMap::invert(double x) const {
  if (!source_.is_interior(x)) throw DomainError(name_ + ": x outside the source domain");
  if (inverse_) return inverse_(x);
  const bool reversing = orientation_reversing();
  // g(z) = f(z) - x is increasing in z after orientation correction.
  auto g = [&](double z) { return reversing ? x - f_(z) : f_(z) - x; };
  double lo;
  double hi;
  if (target_.kind == DomainKind::open_interval) {
    lo = target_.lower;
    hi = target_.upper;
  } else {
    const double mid = reference_point(target_);
    double width = 1.0;
    lo = target_.kind == DomainKind::half_line ? 0.0 : mid - width;
    hi = mid + width;
    for (int i = 0; i < 200 && g(hi) < 0.0; ++i) hi = mid + (width *= 2.0);
    width = 1.0;
    if (target_.kind == DomainKind::full_line) {
      for (int i = 0; i < 200 && g(lo) > 0.0; ++i) lo = mid - (width *= 2.0);
    }
  }
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (g(mid) < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

PCTMap builtin_exp_map() {
  return PCTMap(
      "exp", [](double z) { return std::exp(-z); }, [](double z) { return -std::exp(-z); },
      [](double z) { return std::exp(-z); }, [](double z) { return -std::exp(-z); },
      [](double x) { return -std::log(x); }, DomainSpec::half_line(), DomainSpec::full_line());
}

PCTMap builtin_logcos_map() {
  return PCTMap(
      "logcos", [](double z) { return -2.0 * std::log(std::cos(z)); },
      [](double z) { return 2.0 * std::tan(z); },
      [](double z) {
        const double c = std::cos(z);
        return 2.0 / (c * c);
      },
      [](double z) {
        const double c = std::cos(z);
        return 4.0 * std::tan(z) / (c * c);
      },
      [](double x) { return std::acos(std::exp(-0.5 * x)); }, DomainSpec::half_line(),
      DomainSpec::open_interval(0.0, std::numbers::pi / 2));
}

PCTMap builtin_map_by_name(const std::string& name) {
  if (name == "exp") return builtin_exp_map();
  if (name == "logcos") return builtin_logcos_map();
  throw ArgumentError("unknown map '" + name + "' (expected exp or logcos)");
}

double transform_potential(const Potential& v, double energy, const PCTMap& map, double z) {
  if (!map.target_domain().is_interior(z)) {
    throw DomainError(map.name() + ": z = " + std::to_string(z) + " outside the target domain");
  }
  const double d1 = map.f1(z);
  const double schwarzian = map.schwarzian_term(z);
  const double x = map.f(z);
  if (!v.domain().is_interior(x)) {
    throw DomainError(map.name() + ": f(z) = " + std::to_string(x) + " outside the domain of " + v.label());
  }
  return d1 * d1 * (v.evaluate(x) - energy) + schwarzian;
}

Potential transformed_potential(const Potential& v, double energy, const PCTMap& map) {
  return Potential([v, energy, map](double z) { return transform_potential(v, energy, map, z); },
                   map.target_domain(), {{"E", energy}}, v.label() + " via " + map.name());
}

MappedWaveFunction map_wavefunction(const WaveFunction& psi_tilde, const PCTMap& map) {
  const Grid& z = psi_tilde.grid();
  const std::size_t n = z.size();
  std::vector<double> x(n);
  std::vector<double> values(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = map.f(z[i]);
    values[i] = map.weight(z[i]) * psi_tilde[i];
  }
  const bool increasing = x[1] > x[0];
  for (std::size_t i = 1; i < n; ++i) {
    if (increasing ? !(x[i] > x[i - 1]) : !(x[i] < x[i - 1])) {
      throw SingularMapError(map.name() + " is not monotone on the wavefunction grid");
    }
  }
  if (!increasing) {
    std::reverse(x.begin(), x.end());
    std::reverse(values.begin(), values.end());
  }
  return {WaveFunction(Grid::from_points(std::move(x), map.source_domain()), std::move(values)),
          !increasing};
}

WaveFunction push_forward(const WaveFunction& psi_tilde, const PCTMap& map, const Grid& x_grid) {
  std::vector<double> z(x_grid.size());
  for (std::size_t i = 0; i < z.size(); ++i) z[i] = map.invert(x_grid[i]);
  std::vector<double> values = interpolate_uniform(psi_tilde, z);
  for (std::size_t i = 0; i < z.size(); ++i) values[i] *= map.weight(z[i]);
  return {x_grid, std::move(values)};
}

WaveFunction pull_back(const WaveFunction& psi, const PCTMap& map, const Grid& z_grid) {
  std::vector<double> x(z_grid.size());
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = map.f(z_grid[i]);
  std::vector<double> values = interpolate_uniform(psi, x);
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double g = map.weight(z_grid[i]);
    if (g == 0.0) throw SingularMapError(map.name() + ": zero weight on the grid");
    values[i] /= g;
  }
  return {z_grid, std::move(values)};
}

double residual_check(const Potential& v, double energy, const WaveFunction& psi) {
  const Grid& grid = psi.grid();
  if (grid.size() < 8) throw ArgumentError("residual check needs at least 8 grid points");
  const double h = grid.spacing();
  if (!(psi.norm() > 0.0)) throw ArgumentError("residual check of a zero wavefunction");
  double sum = 0.0;
  for (std::size_t i = 2; i + 2 < grid.size(); ++i) {
    const double lap = (psi[i + 1] - 2.0 * psi[i] + psi[i - 1]) / (h * h);
    const double r = -lap + (v(grid[i]) - energy) * psi[i];
    sum += r * r;
  }
  return std::sqrt(h * sum) / psi.norm();
}

std::vector<BasisFunction> morse_basis() {
  return {{"exp(-2z)", [](double z) { return std::exp(-2.0 * z); }},
          {"exp(-z)", [](double z) { return std::exp(-z); }},
          {"1", [](double) { return 1.0; }}};
}

std::vector<BasisFunction> pt1_basis() {
  return {{"sec^2", [](double z) {
             const double c = std::cos(z);
             return 1.0 / (c * c);
           }},
          {"csc^2", [](double z) {
             const double s = std::sin(z);
             return 1.0 / (s * s);
           }},
          {"1", [](double) { return 1.0; }}};
}

std::vector<BasisFunction> image_basis(const PCTMap& map) {
  if (map.name() == "exp") return morse_basis();
  if (map.name() == "logcos") return pt1_basis();
  throw ArgumentError("no natural image basis for map '" + map.name() + "'");
}

CoefficientFit fit_image(const Potential& v, double energy, const PCTMap& map,
                         const std::vector<BasisFunction>& basis,
                         const std::vector<double>& fit_points,
                         const std::vector<double>& check_points) {
  if (basis.empty() || fit_points.size() < basis.size()) {
    throw ArgumentError("fit needs at least as many points as basis functions");
  }
  const auto rows = static_cast<Eigen::Index>(fit_points.size());
  const auto cols = static_cast<Eigen::Index>(basis.size());
  Eigen::MatrixXd design(rows, cols);
  Eigen::VectorXd rhs(rows);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const double z = fit_points[static_cast<std::size_t>(i)];
    for (Eigen::Index j = 0; j < cols; ++j) design(i, j) = basis[static_cast<std::size_t>(j)].phi(z);
    rhs(i) = transform_potential(v, energy, map, z);
  }
  const Eigen::VectorXd coef = design.colPivHouseholderQr().solve(rhs);
  CoefficientFit fit;
  for (Eigen::Index j = 0; j < cols; ++j) {
    fit.names.push_back(basis[static_cast<std::size_t>(j)].name);
    fit.coefficients.push_back(coef(j));
  }
  for (double z : check_points) {
    double model = 0.0;
    for (std::size_t j = 0; j < basis.size(); ++j) model += fit.coefficients[j] * basis[j].phi(z);
    fit.max_check_error = std::max(fit.max_check_error, std::abs(model - transform_potential(v, energy, map, z)));
  }
  return fit;
}

}  // namespace sipot::pct
