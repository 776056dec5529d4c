#pragma once

#include <span>
#include <vector>

#include "sipot/domain.hpp"
#include "sipot/model.hpp"
#include "sipot/spectrum.hpp"

namespace sipot::oracle {

/// Symmetric tridiagonal matrix: diagonal d (size n), off-diagonal e (size n-1).
struct SymmetricTridiagonal {
  std::vector<double> diagonal;
  std::vector<double> off_diagonal;

  std::size_t size() const noexcept { return diagonal.size(); }
};

/// Number of eigenvalues strictly below x (Sturm sequence count).
std::size_t eigenvalues_below(const SymmetricTridiagonal& t, double x);

/// k-th smallest eigenvalue (0-based) by bisection.
double eigenvalue_by_bisection(const SymmetricTridiagonal& t, std::size_t k);

/// Eigenvector for an isolated eigenvalue by inverse iteration; unit Euclidean norm.
std::vector<double> inverse_iteration(const SymmetricTridiagonal& t, double eigenvalue);

/// -D^2 + V on the grid with Dirichlet zero values just outside both ends.
SymmetricTridiagonal assemble_hamiltonian(const Potential& v, const Grid& grid);

struct EigenResult {
  Spectrum spectrum;
  std::vector<WaveFunction> wavefunctions;
  Grid grid;
  /// V at the end sample(s) facing an infinite boundary (both ends for an open interval, the
  /// outer end for the half-line); levels below it are flagged bound.
  double bound_threshold = 0.0;
  std::vector<bool> bound;
};

/// k lowest eigenpairs of the finite-difference Hamiltonian. Requires a uniform grid of
/// at least 200 points and 1 <= k <= grid size.
EigenResult solve_bound_states(const Potential& v, const Grid& grid, int k);

struct LevelComparison {
  int n = 0;
  double first = 0.0;
  double second = 0.0;
  double deviation = 0.0;
  double allowed = 0.0;
  bool pass = false;
};

struct ComparisonReport {
  std::vector<LevelComparison> levels;
  double worst_deviation = 0.0;
  bool all_pass = true;
  std::vector<int> only_in_first;
  std::vector<int> only_in_second;
};

/// Pairs levels by n; pass iff |Ea - Eb| <= abs_tol + rel_tol * max(|Ea|, |Eb|).
ComparisonReport compare_spectra(const Spectrum& a, const Spectrum& b, double rel_tol,
                                 double abs_tol);

}  // namespace sipot::oracle
