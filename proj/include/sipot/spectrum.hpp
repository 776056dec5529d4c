#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sipot/domain.hpp"
#include "sipot/model.hpp"

namespace sipot {

/// Samples of psi on a grid. `norm` is the trapezoidal L2 norm of the samples.
/// Functions built by this library also keep long double samples, so chained raises do not
/// round to double between derivatives.
class WaveFunction {
 public:
  WaveFunction(Grid grid, std::vector<double> values);
  WaveFunction(Grid grid, std::vector<long double> values);

  const Grid& grid() const noexcept { return grid_; }
  std::span<const double> values() const noexcept { return values_; }
  std::span<const long double> extended_values() const noexcept { return extended_; }
  double operator[](std::size_t i) const { return values_[i]; }
  std::size_t size() const noexcept { return values_.size(); }
  double norm() const noexcept { return norm_; }

  /// Copy scaled to unit norm; throws ArgumentError for a zero function.
  WaveFunction normalized() const;

 private:
  Grid grid_;
  std::vector<double> values_;
  std::vector<long double> extended_;
  double norm_;
};

/// Trapezoidal inner product; both functions must share the same grid points.
double inner_product(const WaveFunction& a, const WaveFunction& b);

/// Sign changes ignoring samples with |psi| below rel_floor * max|psi|.
int node_count(const WaveFunction& psi, double rel_floor = 1e-8);

/// Samples psi at arbitrary points by 6-point Lagrange interpolation on its uniform grid.
/// Points outside the sampled range give 0.
std::vector<double> interpolate_uniform(const WaveFunction& psi, std::span<const double> at);

enum class Provenance { algebraic, oracle };

std::string to_string(Provenance p);

struct SpectrumEntry {
  int n = 0;
  double energy = 0.0;
};

class Spectrum {
 public:
  Spectrum(std::vector<SpectrumEntry> entries, Provenance provenance,
           std::optional<int> cutoff = std::nullopt);

  const std::vector<SpectrumEntry>& entries() const noexcept { return entries_; }
  Provenance provenance() const noexcept { return provenance_; }
  /// First level index dropped because it falls outside the bound region.
  std::optional<int> cutoff() const noexcept { return cutoff_; }
  std::size_t size() const noexcept { return entries_.size(); }
  std::vector<double> energies() const;

 private:
  std::vector<SpectrumEntry> entries_;
  Provenance provenance_;
  std::optional<int> cutoff_;
};

/// E_n = e0 + R(a_1) + ... + R(a_n) for n = 0..n_max, truncated at the bound-level count
/// of the model (or at the first non-increasing step).
Spectrum algebraic_levels(const ShapeInvariantModel& model, int n_max);

/// psi_0(x) = exp(-int W(t; a_shift) dt), integrated cell by cell (eight-point Gauss-Legendre)
/// from the grid midpoint, normalized to 1. shift = k gives the ground state of H(a_k).
WaveFunction ground_state(const ShapeInvariantModel& model, const Grid& grid, int shift = 0);

/// A^dagger(a) psi = W(x; a) psi - psi' with a fourth-order five-point derivative
/// (one-sided near the ends). Requires a uniform grid.
WaveFunction apply_raising(const Superpotential& sp, double a, const WaveFunction& psi);
/// A(a) psi = W(x; a) psi + psi'.
WaveFunction apply_lowering(const Superpotential& sp, double a, const WaveFunction& psi);

/// Given psi, the `level`-th eigenstate of H(a_{shift+1}), returns the (level+1)-th eigenstate
/// of H(a_shift) = A^dagger(a_shift) psi / sqrt(R(a_{shift+1}) + ... + R(a_{shift+level+1})).
/// The derivative acts on the smooth prefactor psi / psi_0(a_{shift+1}).
/// Throws LadderExhaustedError when the target level is not bound.
WaveFunction raise_state(const ShapeInvariantModel& model, const WaveFunction& psi, int level,
                         int shift = 0);

/// n-th eigenstate of H(a_0): ground state of H(a_n) raised n times. The chain runs on the
/// smooth prefactor psi / psi_0(a_k) and the result is renormalized. Every raise is one
/// numerical derivative, so rounding grows like eps / h^n; on the default grids the states
/// are reliable up to n = 4.
WaveFunction eigenstate(const ShapeInvariantModel& model, const Grid& grid, int n);

}  // namespace sipot
