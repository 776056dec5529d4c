#include "sipot/model.hpp"

#include <algorithm>
#include <cmath>

#include "sipot/errors.hpp"

namespace sipot {

Potential::Potential(Evaluator evaluator, DomainSpec domain, std::map<std::string, double> params,
                     std::string label)
    : evaluator_(std::move(evaluator)),
      domain_(domain),
      params_(std::move(params)),
      label_(std::move(label)) {
  if (!evaluator_) throw ArgumentError("potential needs an evaluator");
}

double Potential::operator()(double x) const {
  if (!domain_.is_interior(x)) {
    throw DomainError(label_ + ": x = " + std::to_string(x) + " outside the domain interior");
  }
  return evaluator_(x);
}

Superpotential::Superpotential(Function w, Function w_prime, DomainSpec domain)
    : w_(std::move(w)), w_prime_(std::move(w_prime)), domain_(domain) {
  if (!w_ || !w_prime_) throw ArgumentError("superpotential needs W and W'");
}

std::string to_string(ParameterClass cls) {
  return cls == ParameterClass::translation ? "translation" : "scaling";
}

ParameterRule ParameterRule::translation(double a0, double eta) {
  if (!std::isfinite(a0) || !std::isfinite(eta)) throw ArgumentError("non-finite parameter rule");
  return {ParameterClass::translation, a0, eta};
}

ParameterRule ParameterRule::scaling(double a0, double q) {
  if (!std::isfinite(a0) || !(q > 0.0) || q == 1.0 || !std::isfinite(q)) {
    throw ArgumentError("scaling rule needs q > 0 and q != 1");
  }
  return {ParameterClass::scaling, a0, q};
}

ParameterRule ParameterRule::rebased(double a0) const { return {class_, a0, step_}; }

double parameter_orbit(const ParameterRule& rule, int n) {
  if (n < 0) throw ArgumentError("parameter orbit index must be non-negative");
  if (rule.parameter_class() == ParameterClass::translation) {
    return rule.a0() + static_cast<double>(n) * rule.step();
  }
  return std::pow(rule.step(), n) * rule.a0();
}

RemainderSequence::RemainderSequence(std::function<double(double)> r, ParameterRule rule)
    : r_(std::move(r)), rule_(rule) {
  if (!r_) throw ArgumentError("remainder needs a function");
}

double RemainderSequence::at(int n) const { return r_(parameter_orbit(rule_, n)); }

double RemainderSequence::partial_sum(int n) const {
  double sum = 0.0;
  for (int k = 1; k <= n; ++k) sum += at(k);
  return sum;
}

ShapeInvariantModel::ShapeInvariantModel(std::string name, Superpotential superpotential,
                                         RemainderSequence remainder, double e0,
                                         Potential potential,
                                         std::optional<int> bound_level_count,
                                         std::optional<PrintedAlgebra> printed_algebra)
    : name_(std::move(name)),
      superpotential_(std::move(superpotential)),
      remainder_(std::move(remainder)),
      e0_(e0),
      potential_(std::move(potential)),
      bound_level_count_(bound_level_count),
      printed_algebra_(std::move(printed_algebra)) {
  if (bound_level_count_ && *bound_level_count_ < 1) {
    throw ArgumentError("a model needs at least one bound level");
  }
}

ShapeInvariantModel ShapeInvariantModel::with_remainder(std::function<double(double)> r,
                                                        std::string name) const {
  return {std::move(name),   superpotential_,    RemainderSequence(std::move(r), rule()),
          e0_,               potential_,         bound_level_count_,
          printed_algebra_};
}

std::pair<Potential, Potential> partner_potentials(const Superpotential& sp, double a) {
  if (!std::isfinite(a)) throw ArgumentError("partner potentials need a finite parameter");
  auto v1 = [sp, a](double x) {
    const double w = sp.value(x, a);
    return w * w - sp.derivative(x, a);
  };
  auto v2 = [sp, a](double x) {
    const double w = sp.value(x, a);
    return w * w + sp.derivative(x, a);
  };
  std::map<std::string, double> params{{"a", a}};
  return {Potential(v1, sp.domain(), params, "V1"), Potential(v2, sp.domain(), params, "V2")};
}

double shape_invariance_residual(const ShapeInvariantModel& model, const Grid& grid) {
  if (grid.size() == 0) throw ArgumentError("empty grid");
  const double a0 = parameter_orbit(model.rule(), 0);
  const double a1 = parameter_orbit(model.rule(), 1);
  const auto [v1_unused, v2_at_a0] = partner_potentials(model.superpotential(), a0);
  const auto [v1_at_a1, v2_unused] = partner_potentials(model.superpotential(), a1);
  const double r1 = model.remainder()(a1);
  double worst = 0.0;
  for (double x : grid.points()) {
    worst = std::max(worst, std::abs(v2_at_a0(x) - v1_at_a1(x) - r1));
  }
  return worst;
}

}  // namespace sipot
