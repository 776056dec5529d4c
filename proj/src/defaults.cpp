#include "sipot/defaults.hpp"

#include <numbers>

#include "sipot/errors.hpp"

namespace sipot::defaults {

Grid oracle_grid(const std::string& name, const DomainSpec& domain) {
  constexpr double half_pi = std::numbers::pi / 2.0;
  if (name == "morse") return Grid::interior(-4.0, 40.0, 100000, domain);
  if (name == "pt1") return Grid::interior(0.0, half_pi, 20000, domain);
  if (name == "coulomb" || name == "inverse-power") return Grid::interior(0.0, 120.0, 8000, domain);
  if (name == "kratzer") return Grid::interior(0.0, 400.0, 20000, domain);
  if (name == "hulthen") return Grid::interior(0.0, 20.0, 80000, domain);
  if (name == "harmonic") return Grid::interior(-10.0, 10.0, 8001, domain);
  throw ArgumentError("no default grid for '" + name + "'");
}

Grid wavefunction_grid(const std::string& name, const DomainSpec& domain) {
  constexpr double half_pi = std::numbers::pi / 2.0;
  if (name == "morse") return Grid::uniform(-4.0, 16.0, 20000, domain);
  if (name == "pt1") return Grid::uniform(1e-3, half_pi - 1e-3, 8000, domain);
  return oracle_grid(name, domain);
}

Grid wavefunction_grid(const ShapeInvariantModel& model) {
  const std::string& name = model.name();
  return wavefunction_grid(name.starts_with("morse") ? std::string("morse") : name, model.domain());
}

}  // namespace sipot::defaults
