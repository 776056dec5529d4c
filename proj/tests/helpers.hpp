#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "sipot/domain.hpp"
#include "sipot/model.hpp"

namespace sipot::test {

inline std::vector<double> random_points(double lo, double hi, int count, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(lo, hi);
  std::vector<double> out(static_cast<std::size_t>(count));
  for (auto& x : out) x = dist(rng);
  return out;
}

// Model with W(x; a) = a x on the full line and an arbitrary remainder along a0 + n.
// Only the remainder matters to the ladder code.
inline ShapeInvariantModel synthetic_model(std::function<double(double)> r, double a0 = 0.0) {
  Superpotential w([](long double x, long double a) { return a * x; },
                   [](long double, long double a) { return a; }, DomainSpec::full_line());
  Potential v([](double x) { return x * x; }, DomainSpec::full_line(), {}, "synthetic");
  return {"synthetic", w, RemainderSequence(std::move(r), ParameterRule::translation(a0, 1.0)), 0.0, v};
}

}  // namespace sipot::test
