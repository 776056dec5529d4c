#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sipot/domain.hpp"
#include "sipot/model.hpp"
#include "sipot/spectrum.hpp"

namespace sipot::pct {

/// Point canonical transformation x = f(z), psi(x) = g(z) psi~(z) with g = c sqrt|f'(z)|.
/// z lives in the target domain, x in the source domain.
class PCTMap {
 public:
  using Function = std::function<double(double)>;

  /// Map with exact derivatives. `inverse` may be empty; it is then found by bisection.
  PCTMap(std::string name, Function f, Function f1, Function f2, Function f3, Function inverse,
         DomainSpec source, DomainSpec target, double c = 1.0);

  /// Map given only by f; derivatives come from Richardson-extrapolated central
  /// differences with step 1e-4 * scale (scale = width of a finite target domain, else 1).
  static PCTMap from_function(std::string name, Function f, DomainSpec source, DomainSpec target,
                              double c = 1.0);

  const std::string& name() const noexcept { return name_; }
  double f(double z) const { return f_(z); }
  double f1(double z) const { return f1_(z); }
  double f2(double z) const { return f2_(z); }
  double f3(double z) const { return f3_(z); }
  double c() const noexcept { return c_; }
  const DomainSpec& source_domain() const noexcept { return source_; }
  const DomainSpec& target_domain() const noexcept { return target_; }
  bool exact_derivatives() const noexcept { return exact_; }

  /// g(z) = c sqrt|f'(z)|.
  double weight(double z) const;
  /// 1/2 (3/2 (f''/f')^2 - f'''/f'). Throws SingularMapError where f' = 0.
  double schwarzian_term(double z) const;
  /// z with f(z) = x.
  double invert(double x) const;
  /// f' < 0 on the target domain.
  bool orientation_reversing() const;

 private:
  std::string name_;
  Function f_, f1_, f2_, f3_, inverse_;
  DomainSpec source_;
  DomainSpec target_;
  double c_;
  bool exact_ = true;
};

/// f(z) = e^{-z}: full line onto the half-line, orientation reversing.
PCTMap builtin_exp_map();
/// f(z) = -2 ln cos z: (0, pi/2) onto the half-line.
PCTMap builtin_logcos_map();
/// "exp" or "logcos"; anything else throws ArgumentError.
PCTMap builtin_map_by_name(const std::string& name);

/// V~(z) - E~ = f'^2 (V(f(z)) - E) + 1/2 (3/2 (f''/f')^2 - f'''/f').
double transform_potential(const Potential& v, double energy, const PCTMap& map, double z);

/// z -> transform_potential(v, energy, map, z) as a Potential on the target domain,
/// to be solved at eigenvalue zero.
Potential transformed_potential(const Potential& v, double energy, const PCTMap& map);

struct MappedWaveFunction {
  WaveFunction psi;
  /// True when samples were re-sorted because f is decreasing.
  bool reversed = false;
};

/// psi(f(z_i)) = g(z_i) psi~(z_i) at the image points x_i = f(z_i), sorted increasing in x.
MappedWaveFunction map_wavefunction(const WaveFunction& psi_tilde, const PCTMap& map);

/// psi on an arbitrary x grid: psi(x) = g(z) psi~(z) at z = f^{-1}(x), psi~ interpolated from
/// its uniform grid.
WaveFunction push_forward(const WaveFunction& psi_tilde, const PCTMap& map, const Grid& x_grid);

/// psi~ on a z grid: psi~(z) = psi(f(z)) / g(z), psi interpolated from its uniform grid.
WaveFunction pull_back(const WaveFunction& psi, const PCTMap& map, const Grid& z_grid);

/// ||(-D^2 + V - E) psi||_2 / ||psi||_2 with second-order central differences, skipping the
/// two samples nearest each end. Uniform grid with at least 8 points.
double residual_check(const Potential& v, double energy, const WaveFunction& psi);

struct BasisFunction {
  std::string name;
  std::function<double(double)> phi;
};

/// {e^{-2z}, e^{-z}, 1}
std::vector<BasisFunction> morse_basis();
/// {sec^2 z, csc^2 z, 1}
std::vector<BasisFunction> pt1_basis();
/// Natural image basis of a built-in map.
std::vector<BasisFunction> image_basis(const PCTMap& map);

struct CoefficientFit {
  std::vector<std::string> names;
  std::vector<double> coefficients;
  /// max |fit - value| at the check points.
  double max_check_error = 0.0;
};

/// Least-squares fit of transform_potential(v, energy, map, .) on `fit_points`, validated
/// on `check_points`.
CoefficientFit fit_image(const Potential& v, double energy, const PCTMap& map,
                         const std::vector<BasisFunction>& basis,
                         const std::vector<double>& fit_points,
                         const std::vector<double>& check_points);

}  // namespace sipot::pct
