#include "sipot/spectrum.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "sipot/errors.hpp"

namespace sipot {

namespace {

double trapezoid_norm_squared(const Grid& grid, std::span<const double> v) {
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    sum += 0.5 * (grid[i + 1] - grid[i]) * (v[i] * v[i] + v[i + 1] * v[i + 1]);
  }
  return sum;
}

void require_interior(const Grid& grid, const DomainSpec& domain) {
  if (!domain.is_interior(grid[0]) || !domain.is_interior(grid[grid.size() - 1])) {
    throw DomainError("grid extends outside the model domain");
  }
}

using Extended = long double;
using ExtendedValues = std::vector<Extended>;

// Fourth-order first derivative: five-point central stencil inside, five-point one-sided
// stencils on the two samples nearest each end.
ExtendedValues derivative(const Grid& grid, const ExtendedValues& v) {
  grid.spacing();
  const Extended h = (static_cast<Extended>(grid[v.size() - 1]) - grid[0]) / static_cast<Extended>(v.size() - 1);
  const std::size_t n = v.size();
  if (n < 5) throw ArgumentError("derivative needs at least five samples");
  ExtendedValues d(n);
  const Extended s = 1.0L / (12.0L * h);
  for (std::size_t i = 2; i + 2 < n; ++i) d[i] = (v[i - 2] - 8.0L * v[i - 1] + 8.0L * v[i + 1] - v[i + 2]) * s;
  d[0] = (-25.0L * v[0] + 48.0L * v[1] - 36.0L * v[2] + 16.0L * v[3] - 3.0L * v[4]) * s;
  d[1] = (-3.0L * v[0] - 10.0L * v[1] + 18.0L * v[2] - 6.0L * v[3] + v[4]) * s;
  d[n - 1] = (25.0L * v[n - 1] - 48.0L * v[n - 2] + 36.0L * v[n - 3] - 16.0L * v[n - 4] + 3.0L * v[n - 5]) * s;
  d[n - 2] = (3.0L * v[n - 1] + 10.0L * v[n - 2] - 18.0L * v[n - 3] + 6.0L * v[n - 4] - v[n - 5]) * s;
  return d;
}

Extended extended_norm(const Grid& grid, const ExtendedValues& v) {
  Extended sum = 0.0L;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    sum += 0.5L * (static_cast<Extended>(grid[i + 1]) - grid[i]) * (v[i] * v[i] + v[i + 1] * v[i + 1]);
  }
  return std::sqrt(sum);
}

// Abscissae recomputed in extended precision; double grid points carry ulp-level jitter
// that the difference stencils would amplify.
ExtendedValues abscissae(const Grid& grid) {
  const std::size_t n = grid.size();
  ExtendedValues x(grid.points().begin(), grid.points().end());
  if (grid.is_uniform()) {
    const Extended first = grid[0];
    const Extended h = (static_cast<Extended>(grid[n - 1]) - first) / static_cast<Extended>(n - 1);
    for (std::size_t i = 0; i < n; ++i) x[i] = first + h * static_cast<Extended>(i);
  }
  return x;
}

ExtendedValues extend(const WaveFunction& psi) {
  return {psi.extended_values().begin(), psi.extended_values().end()};
}

WaveFunction narrow(const Grid& grid, ExtendedValues v) { return {grid, std::move(v)}; }

// W(x; a) psi -/+ psi'; sign = -1 raises, +1 lowers.
ExtendedValues apply_factor(const Superpotential& sp, double a, const Grid& grid,
                            const ExtendedValues& psi, Extended sign) {
  const ExtendedValues d = derivative(grid, psi);
  const ExtendedValues x = abscissae(grid);
  ExtendedValues out(psi.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = sp.value_extended(x[i], a) * psi[i] + sign * d[i];
  }
  return out;
}

void require_bound_shift(const ShapeInvariantModel& model, int shift) {
  if (shift < 0) throw ArgumentError("shift must be non-negative");
  if (model.bound_level_count() && shift >= *model.bound_level_count()) {
    throw LadderExhaustedError("H(a_" + std::to_string(shift) + ") of " + model.name() +
                               " has no normalizable ground state");
  }
}

// Integral of W(x; a_shift) from the grid midpoint: the ground state is exp(-integral).
// Eight-point Gauss-Legendre per cell stays accurate next to singular endpoints, where
// W changes on the scale of a single cell.
ExtendedValues ground_exponent(const ShapeInvariantModel& model, const ExtendedValues& x, int shift) {
  static constexpr std::array<Extended, 4> nodes{0.1834346424956498049394761L, 0.5255324099163289858177390L,
                                                 0.7966664774136267395915539L, 0.9602898564975362316835609L};
  static constexpr std::array<Extended, 4> weights{0.3626837833783619829651504L, 0.3137066458778872873379622L,
                                                   0.2223810344533744705443560L, 0.1012285362903762591525314L};
  const double a = parameter_orbit(model.rule(), shift);
  const Superpotential& sp = model.superpotential();
  const std::size_t n = x.size();
  ExtendedValues integral(n, 0.0L);
  auto segment = [&](std::size_t i) {
    const Extended half = 0.5L * (x[i + 1] - x[i]);
    const Extended centre = 0.5L * (x[i + 1] + x[i]);
    Extended sum = 0.0L;
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      sum += weights[k] * (sp.value_extended(centre - half * nodes[k], a) + sp.value_extended(centre + half * nodes[k], a));
    }
    return half * sum;
  };
  const std::size_t mid = n / 2;
  for (std::size_t i = mid; i + 1 < n; ++i) integral[i + 1] = integral[i] + segment(i);
  for (std::size_t i = mid; i > 0; --i) integral[i - 1] = integral[i] - segment(i - 1);
  return integral;
}

void normalize(const Grid& grid, ExtendedValues& values) {
  const Extended norm = extended_norm(grid, values);
  for (Extended& v : values) v /= norm;
}

ExtendedValues ground_values(const ShapeInvariantModel& model, const Grid& grid, int shift) {
  require_bound_shift(model, shift);
  require_interior(grid, model.domain());
  const ExtendedValues integral = ground_exponent(model, abscissae(grid), shift);
  Extended top = -integral[0];
  for (Extended v : integral) top = std::max(top, -v);
  ExtendedValues values(integral.size());
  for (std::size_t i = 0; i < values.size(); ++i) values[i] = std::exp(-integral[i] - top);
  normalize(grid, values);
  return values;
}

// psi_n = A+(a_0) ... A+(a_{n-1}) psi_0(a_n), carried as psi_0(a_k) Q_k. Then
// Q_{k-1} = psi_0(a_k) / psi_0(a_{k-1}) [(W(a_{k-1}) + W(a_k)) Q_k - Q_k'].
// Q stays polynomial-like where psi_0 varies on the scale of a few samples, so the
// difference stencils keep their accuracy up to the grid ends.
ExtendedValues excited_values(const ShapeInvariantModel& model, const Grid& grid, int n) {
  require_bound_shift(model, n);
  require_interior(grid, model.domain());
  const Superpotential& sp = model.superpotential();
  const ExtendedValues x = abscissae(grid);
  const std::size_t size = x.size();
  ExtendedValues q(size, 1.0L);
  ExtendedValues upper = ground_exponent(model, x, n);
  for (int k = n; k > 0; --k) {
    const ExtendedValues lower = ground_exponent(model, x, k - 1);
    const double a_lower = parameter_orbit(model.rule(), k - 1);
    const double a_upper = parameter_orbit(model.rule(), k);
    const ExtendedValues dq = derivative(grid, q);
    for (std::size_t i = 0; i < size; ++i) {
      const Extended w_sum = sp.value_extended(x[i], a_lower) + sp.value_extended(x[i], a_upper);
      q[i] = std::exp(lower[i] - upper[i]) * (w_sum * q[i] - dq[i]);
    }
    upper = lower;
  }
  Extended top = -std::numeric_limits<Extended>::infinity();
  for (std::size_t i = 0; i < size; ++i) {
    if (q[i] != 0.0L) top = std::max(top, std::log(std::abs(q[i])) - upper[i]);
  }
  ExtendedValues values(size);
  for (std::size_t i = 0; i < size; ++i) {
    values[i] = q[i] == 0.0L ? 0.0L : std::copysign(std::exp(std::log(std::abs(q[i])) - upper[i] - top), q[i]);
  }
  normalize(grid, values);
  return values;
}

ExtendedValues raise_values(const ShapeInvariantModel& model, const Grid& grid,
                            const ExtendedValues& psi, int level, int shift) {
  if (level < 0 || shift < 0) throw ArgumentError("level and shift must be non-negative");
  const int target = shift + level + 1;
  if (model.bound_level_count() && target >= *model.bound_level_count()) {
    throw LadderExhaustedError("level " + std::to_string(target) + " of " + model.name() +
                               " is not bound (" + std::to_string(*model.bound_level_count()) +
                               " bound levels)");
  }
  Extended sum = 0.0L;
  for (int k = shift + 1; k <= target; ++k) sum += model.remainder().at(k);
  if (!(sum > 0.0L)) {
    throw LadderExhaustedError("non-positive ladder normalizer at level " + std::to_string(target));
  }
  require_interior(grid, model.domain());
  // psi is an eigenstate of H(a_{shift+1}), so Q = psi / psi_0(a_{shift+1}) is smooth and
  // A+(a_shift) psi = psi_0(a_{shift+1}) [(W(a_shift) + W(a_{shift+1})) Q - Q'].
  const Superpotential& sp = model.superpotential();
  const double a_lower = parameter_orbit(model.rule(), shift);
  const double a_upper = parameter_orbit(model.rule(), shift + 1);
  const ExtendedValues x = abscissae(grid);
  const ExtendedValues exponent = ground_exponent(model, x, shift + 1);
  const Extended base = *std::min_element(exponent.begin(), exponent.end());
  ExtendedValues q(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) q[i] = psi[i] * std::exp(exponent[i] - base);
  const ExtendedValues dq = derivative(grid, q);
  const Extended scale = 1.0L / std::sqrt(sum);
  ExtendedValues raised(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const Extended w_sum = sp.value_extended(x[i], a_lower) + sp.value_extended(x[i], a_upper);
    raised[i] = scale * std::exp(base - exponent[i]) * (w_sum * q[i] - dq[i]);
  }
  return raised;
}

}  // namespace

WaveFunction::WaveFunction(Grid grid, std::vector<double> values)
    : WaveFunction(std::move(grid), std::vector<long double>(values.begin(), values.end())) {}

WaveFunction::WaveFunction(Grid grid, std::vector<long double> values)
    : grid_(std::move(grid)), values_(values.begin(), values.end()), extended_(std::move(values)) {
  if (values_.size() != grid_.size()) throw ArgumentError("wavefunction size does not match grid");
  for (double v : values_) {
    if (!std::isfinite(v)) throw ArgumentError("wavefunction has non-finite samples");
  }
  norm_ = std::sqrt(trapezoid_norm_squared(grid_, values_));
}

WaveFunction WaveFunction::normalized() const {
  if (!(norm_ > 0.0)) throw ArgumentError("cannot normalize a zero wavefunction");
  std::vector<long double> v(extended_);
  for (long double& x : v) x /= norm_;
  return {grid_, std::move(v)};
}

double inner_product(const WaveFunction& a, const WaveFunction& b) {
  const Grid& grid = a.grid();
  if (grid.size() != b.grid().size()) throw ArgumentError("inner product needs a common grid");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid[i] != b.grid()[i]) throw ArgumentError("inner product needs a common grid");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    sum += 0.5 * (grid[i + 1] - grid[i]) * (a[i] * b[i] + a[i + 1] * b[i + 1]);
  }
  return sum;
}

int node_count(const WaveFunction& psi, double rel_floor) {
  double peak = 0.0;
  for (double v : psi.values()) peak = std::max(peak, std::abs(v));
  const double floor = rel_floor * peak;
  int nodes = 0;
  int last_sign = 0;
  for (double v : psi.values()) {
    if (std::abs(v) <= floor) continue;
    const int sign = v > 0.0 ? 1 : -1;
    if (last_sign != 0 && sign != last_sign) ++nodes;
    last_sign = sign;
  }
  return nodes;
}

std::vector<double> interpolate_uniform(const WaveFunction& psi, std::span<const double> at) {
  constexpr int stencil = 6;
  const Grid& grid = psi.grid();
  const double h = grid.spacing();
  const auto n = static_cast<long>(grid.size());
  if (n < stencil) throw ArgumentError("interpolation needs at least six samples");
  const double x0 = grid[0];
  const double xn = grid[grid.size() - 1];
  std::vector<double> out(at.size(), 0.0);
  for (std::size_t k = 0; k < at.size(); ++k) {
    const double x = at[k];
    if (x < x0 || x > xn) continue;
    const double s = (x - x0) / h;
    const long cell = static_cast<long>(std::floor(s));
    const long start = std::clamp(cell - (stencil / 2 - 1), 0L, n - stencil);
    double value = 0.0;
    for (int j = 0; j < stencil; ++j) {
      double weight = 1.0;
      for (int m = 0; m < stencil; ++m) {
        if (m == j) continue;
        weight *= (s - static_cast<double>(start + m)) / static_cast<double>(j - m);
      }
      value += weight * psi[static_cast<std::size_t>(start + j)];
    }
    out[k] = value;
  }
  return out;
}

std::string to_string(Provenance p) { return p == Provenance::algebraic ? "algebraic" : "oracle"; }

Spectrum::Spectrum(std::vector<SpectrumEntry> entries, Provenance provenance,
                   std::optional<int> cutoff)
    : entries_(std::move(entries)), provenance_(provenance), cutoff_(cutoff) {
  for (std::size_t i = 1; i < entries_.size(); ++i) {
    if (entries_[i].n <= entries_[i - 1].n) throw ArgumentError("spectrum levels must increase");
  }
}

std::vector<double> Spectrum::energies() const {
  std::vector<double> e;
  e.reserve(entries_.size());
  for (const auto& entry : entries_) e.push_back(entry.energy);
  return e;
}

Spectrum algebraic_levels(const ShapeInvariantModel& model, int n_max) {
  if (n_max < 0) throw ArgumentError("n_max must be non-negative");
  std::vector<SpectrumEntry> entries;
  std::optional<int> cutoff;
  double energy = model.e0();
  for (int n = 0; n <= n_max; ++n) {
    if (model.bound_level_count() && n >= *model.bound_level_count()) {
      cutoff = n;
      break;
    }
    if (n > 0) {
      const double r = model.remainder().at(n);
      if (!(r > 0.0)) {
        cutoff = n;
        break;
      }
      energy += r;
    }
    entries.push_back({n, energy});
  }
  return {std::move(entries), Provenance::algebraic, cutoff};
}

WaveFunction ground_state(const ShapeInvariantModel& model, const Grid& grid, int shift) {
  return narrow(grid, ground_values(model, grid, shift));
}

WaveFunction apply_raising(const Superpotential& sp, double a, const WaveFunction& psi) {
  return narrow(psi.grid(), apply_factor(sp, a, psi.grid(), extend(psi), -1.0L));
}

WaveFunction apply_lowering(const Superpotential& sp, double a, const WaveFunction& psi) {
  return narrow(psi.grid(), apply_factor(sp, a, psi.grid(), extend(psi), 1.0L));
}

WaveFunction raise_state(const ShapeInvariantModel& model, const WaveFunction& psi, int level,
                         int shift) {
  return narrow(psi.grid(), raise_values(model, psi.grid(), extend(psi), level, shift));
}

WaveFunction eigenstate(const ShapeInvariantModel& model, const Grid& grid, int n) {
  if (n < 0) throw ArgumentError("level must be non-negative");
  // Each raise spoils two more samples per end through the one-sided stencils, so the chain
  // runs on a grid padded by 2n samples per side wherever the domain leaves room.
  std::size_t pad = 0;
  if (n > 0 && grid.is_uniform()) {
    const double h = grid.spacing();
    const double first = grid[0];
    const double last = grid[grid.size() - 1];
    for (std::size_t p = 2 * static_cast<std::size_t>(n); p > 0; --p) {
      const double offset = h * static_cast<double>(p);
      if (grid.domain().is_interior(first - offset) && grid.domain().is_interior(last + offset)) {
        pad = p;
        break;
      }
    }
  }
  const Grid work = pad == 0 ? grid
                             : Grid::uniform(grid[0] - grid.spacing() * static_cast<double>(pad),
                                             grid[grid.size() - 1] + grid.spacing() * static_cast<double>(pad),
                                             grid.size() + 2 * pad, grid.domain());
  const ExtendedValues psi = excited_values(model, work, n);
  if (pad == 0) return narrow(grid, psi);
  const auto begin = psi.begin() + static_cast<std::ptrdiff_t>(pad);
  return {grid, ExtendedValues(begin, begin + static_cast<std::ptrdiff_t>(grid.size()))};
}

}  // namespace sipot
