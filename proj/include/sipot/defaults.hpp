#pragma once

#include <string>

#include "sipot/domain.hpp"
#include "sipot/model.hpp"

namespace sipot::defaults {

/// Grid used by the finite-difference solver for a named catalog potential:
/// morse (-4, 40)/100000, pt1 (0, pi/2)/20000, coulomb and inverse-power (0, 120)/8000,
/// kratzer (0, 400)/20000, hulthen (0, 20)/80000, harmonic (-10, 10)/8001.
/// Dirichlet zeros sit at the interval ends. Unknown names throw ArgumentError.
Grid oracle_grid(const std::string& name, const DomainSpec& domain);

/// Grid for algebraically generated wavefunctions: morse [-4, 16]/20000,
/// pt1 [1e-3, pi/2 - 1e-3]/8000. Other names fall back to oracle_grid.
Grid wavefunction_grid(const std::string& name, const DomainSpec& domain);

/// Same as above for a shape-invariant model, keyed by its name.
Grid wavefunction_grid(const ShapeInvariantModel& model);

}  // namespace sipot::defaults
