#include "sipot/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "sipot/errors.hpp"

namespace sipot::oracle {

namespace {

double pivot_floor(const SymmetricTridiagonal& t) {
  double emax = 1.0;
  for (double e : t.off_diagonal) emax = std::max(emax, e * e);
  return std::numeric_limits<double>::min() * emax;
}

std::pair<double, double> gershgorin_bounds(const SymmetricTridiagonal& t) {
  const std::size_t n = t.size();
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (std::size_t i = 0; i < n; ++i) {
    double radius = 0.0;
    if (i > 0) radius += std::abs(t.off_diagonal[i - 1]);
    if (i + 1 < n) radius += std::abs(t.off_diagonal[i]);
    lo = std::min(lo, t.diagonal[i] - radius);
    hi = std::max(hi, t.diagonal[i] + radius);
  }
  const double pad = 2.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(lo), std::abs(hi));
  return {lo - pad - 1e-300, hi + pad + 1e-300};
}

// Solves (A) x = rhs for a general tridiagonal A with partial pivoting (LAPACK dgtsv scheme).
void solve_tridiagonal(std::vector<double> sub, std::vector<double> diag, std::vector<double> sup,
                       std::vector<double>& x) {
  const std::size_t n = diag.size();
  constexpr double tiny = 1e-300;
  std::vector<double> sup2(n > 2 ? n - 2 : 0, 0.0);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (std::abs(diag[i]) >= std::abs(sub[i])) {
      if (diag[i] == 0.0) diag[i] = tiny;
      const double fact = sub[i] / diag[i];
      diag[i + 1] -= fact * sup[i];
      x[i + 1] -= fact * x[i];
    } else {
      const double fact = diag[i] / sub[i];
      diag[i] = sub[i];
      const double temp = diag[i + 1];
      diag[i + 1] = sup[i] - fact * temp;
      if (i + 2 < n) {
        sup2[i] = sup[i + 1];
        sup[i + 1] = -fact * sup2[i];
      }
      sup[i] = temp;
      const double b = x[i];
      x[i] = x[i + 1];
      x[i + 1] = b - fact * x[i + 1];
    }
  }
  if (diag[n - 1] == 0.0) diag[n - 1] = tiny;
  x[n - 1] /= diag[n - 1];
  if (n > 1) x[n - 2] = (x[n - 2] - sup[n - 2] * x[n - 1]) / diag[n - 2];
  for (std::size_t i = n - 2; i-- > 0;) {
    x[i] = (x[i] - sup[i] * x[i + 1] - sup2[i] * x[i + 2]) / diag[i];
  }
}

void scale_to_unit(std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  s = std::sqrt(s);
  for (double& x : v) x /= s;
}

}  // namespace

std::size_t eigenvalues_below(const SymmetricTridiagonal& t, double x) {
  const double pivmin = pivot_floor(t);
  std::size_t count = 0;
  double q = t.diagonal[0] - x;
  if (std::abs(q) < pivmin) q = -pivmin;
  if (q < 0.0) ++count;
  for (std::size_t i = 1; i < t.size(); ++i) {
    const double e = t.off_diagonal[i - 1];
    q = t.diagonal[i] - x - e * e / q;
    if (std::abs(q) < pivmin) q = -pivmin;
    if (q < 0.0) ++count;
  }
  return count;
}

double eigenvalue_by_bisection(const SymmetricTridiagonal& t, std::size_t k) {
  if (k >= t.size()) throw ArgumentError("eigenvalue index exceeds matrix size");
  auto [lo, hi] = gershgorin_bounds(t);
  const double pivmin = pivot_floor(t);
  for (int iter = 0; iter < 400; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (hi - lo <= 2.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(lo), std::abs(hi)) + pivmin) {
      break;
    }
    if (eigenvalues_below(t, mid) > k) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::vector<double> inverse_iteration(const SymmetricTridiagonal& t, double eigenvalue) {
  const std::size_t n = t.size();
  if (n < 2) throw ArgumentError("inverse iteration needs n >= 2");
  std::vector<double> diag(n);
  for (std::size_t i = 0; i < n; ++i) diag[i] = t.diagonal[i] - eigenvalue;
  std::vector<double> v(n);
  // Deterministic start with no special symmetry.
  for (std::size_t i = 0; i < n; ++i) v[i] = 1.0 + 0.5 * std::sin(0.7 * static_cast<double>(i) + 0.3);
  for (int iter = 0; iter < 4; ++iter) {
    solve_tridiagonal(t.off_diagonal, diag, t.off_diagonal, v);
    scale_to_unit(v);
  }
  return v;
}

SymmetricTridiagonal assemble_hamiltonian(const Potential& v, const Grid& grid) {
  const double h = grid.spacing();
  const double kinetic = 1.0 / (h * h);
  SymmetricTridiagonal t;
  t.diagonal.resize(grid.size());
  t.off_diagonal.assign(grid.size() - 1, -kinetic);
  for (std::size_t i = 0; i < grid.size(); ++i) t.diagonal[i] = 2.0 * kinetic + v(grid[i]);
  return t;
}

EigenResult solve_bound_states(const Potential& v, const Grid& grid, int k) {
  if (!grid.is_uniform()) throw ArgumentError("oracle needs a uniform grid");
  if (grid.size() < 200) throw ArgumentError("oracle needs at least 200 grid points");
  if (k < 1 || static_cast<std::size_t>(k) > grid.size()) {
    throw ArgumentError("requested " + std::to_string(k) + " levels from a " +
                        std::to_string(grid.size()) + "-point grid");
  }
  const SymmetricTridiagonal t = assemble_hamiltonian(v, grid);
  // Only ends facing an infinite domain boundary carry a continuum; a finite singular end
  // (r -> 0, a wall of an open interval) does not.
  const double v_first = v.evaluate(grid[0]);
  const double v_last = v.evaluate(grid[grid.size() - 1]);
  double threshold = v_last;
  switch (v.domain().kind) {
    case DomainKind::full_line: threshold = std::min(v_first, v_last); break;
    case DomainKind::half_line: threshold = v_last; break;
    case DomainKind::open_interval: threshold = std::min(v_first, v_last); break;
  }

  std::vector<SpectrumEntry> entries;
  std::vector<WaveFunction> states;
  std::vector<bool> bound;
  std::vector<std::vector<double>> vectors;
  for (int n = 0; n < k; ++n) {
    const double e = eigenvalue_by_bisection(t, static_cast<std::size_t>(n));
    std::vector<double> vec = inverse_iteration(t, e);
    for (const auto& prev : vectors) {
      double dot = 0.0;
      for (std::size_t i = 0; i < vec.size(); ++i) dot += prev[i] * vec[i];
      for (std::size_t i = 0; i < vec.size(); ++i) vec[i] -= dot * prev[i];
    }
    scale_to_unit(vec);
    double peak = 0.0;
    for (double x : vec) peak = std::max(peak, std::abs(x));
    const auto lead = std::find_if(vec.begin(), vec.end(), [&](double x) { return std::abs(x) > 1e-3 * peak; });
    if (lead != vec.end() && *lead < 0.0) {
      for (double& x : vec) x = -x;
    }
    vectors.push_back(vec);
    entries.push_back({n, e});
    bound.push_back(e < threshold);
    states.push_back(WaveFunction(grid, std::move(vec)).normalized());
  }
  return {Spectrum(std::move(entries), Provenance::oracle), std::move(states), grid, threshold,
          std::move(bound)};
}

ComparisonReport compare_spectra(const Spectrum& a, const Spectrum& b, double rel_tol,
                                 double abs_tol) {
  if (a.size() == 0 || b.size() == 0) throw ArgumentError("cannot compare an empty spectrum");
  std::map<int, double> second;
  for (const auto& e : b.entries()) second[e.n] = e.energy;
  ComparisonReport report;
  for (const auto& e : a.entries()) {
    const auto it = second.find(e.n);
    if (it == second.end()) {
      report.only_in_first.push_back(e.n);
      continue;
    }
    LevelComparison level;
    level.n = e.n;
    level.first = e.energy;
    level.second = it->second;
    level.deviation = std::abs(e.energy - it->second);
    level.allowed = abs_tol + rel_tol * std::max(std::abs(e.energy), std::abs(it->second));
    level.pass = level.deviation <= level.allowed;
    report.worst_deviation = std::max(report.worst_deviation, level.deviation);
    report.all_pass = report.all_pass && level.pass;
    report.levels.push_back(level);
    second.erase(it);
  }
  for (const auto& [n, energy] : second) report.only_in_second.push_back(n);
  return report;
}

}  // namespace sipot::oracle
