#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "sipot/domain.hpp"

namespace sipot {

class Grid;

/// Real potential V(x) with its domain and the named parameters it was built from.
class Potential {
 public:
  using Evaluator = std::function<double(double)>;

  Potential(Evaluator evaluator, DomainSpec domain, std::map<std::string, double> params,
            std::string label);

  /// Throws DomainError outside the open domain.
  double operator()(double x) const;
  /// Unchecked evaluation.
  double evaluate(double x) const { return evaluator_(x); }

  const DomainSpec& domain() const noexcept { return domain_; }
  const std::map<std::string, double>& params() const noexcept { return params_; }
  const std::string& label() const noexcept { return label_; }

 private:
  Evaluator evaluator_;
  DomainSpec domain_;
  std::map<std::string, double> params_;
  std::string label_;
};

/// W(x; a) together with its analytic x-derivative. Evaluated in extended precision so the
/// ladder chain can difference it without double rounding noise.
class Superpotential {
 public:
  using Function = std::function<long double(long double, long double)>;

  Superpotential(Function w, Function w_prime, DomainSpec domain);

  double value(double x, double a) const { return static_cast<double>(w_(x, a)); }
  double derivative(double x, double a) const { return static_cast<double>(w_prime_(x, a)); }
  long double value_extended(long double x, long double a) const { return w_(x, a); }
  long double derivative_extended(long double x, long double a) const { return w_prime_(x, a); }
  const DomainSpec& domain() const noexcept { return domain_; }

 private:
  Function w_;
  Function w_prime_;
  DomainSpec domain_;
};

enum class ParameterClass { translation, scaling };

std::string to_string(ParameterClass cls);

/// Parameter update a_n = a_0 + n*step (translation) or a_n = step^n * a_0 (scaling).
class ParameterRule {
 public:
  static ParameterRule translation(double a0, double eta);
  /// q > 0, q != 1.
  static ParameterRule scaling(double a0, double q);

  ParameterClass parameter_class() const noexcept { return class_; }
  double a0() const noexcept { return a0_; }
  double step() const noexcept { return step_; }

  /// Same class and step, new starting value.
  ParameterRule rebased(double a0) const;

 private:
  ParameterRule(ParameterClass cls, double a0, double step) : class_(cls), a0_(a0), step_(step) {}

  ParameterClass class_;
  double a0_;
  double step_;
};

/// a_n for n >= 0; negative n throws ArgumentError.
double parameter_orbit(const ParameterRule& rule, int n);

/// The remainder R(a) evaluated along a parameter orbit.
class RemainderSequence {
 public:
  RemainderSequence(std::function<double(double)> r, ParameterRule rule);

  double operator()(double a) const { return r_(a); }
  /// R(a_n).
  double at(int n) const;
  /// R(a_1) + ... + R(a_n); zero for n = 0.
  double partial_sum(int n) const;
  const ParameterRule& rule() const noexcept { return rule_; }

 private:
  std::function<double(double)> r_;
  ParameterRule rule_;
};

/// Scale factors and algebra label printed alongside a model, kept for comparison.
struct PrintedAlgebra {
  std::string label;
  double k0_scale = 0.0;
  double kpm_scale = 0.0;
};

/// Everything the algebraic engine needs: W, parameter orbit, remainder, ground energy
/// and the physical potential V = W^2 - W' + e0 at a_0.
class ShapeInvariantModel {
 public:
  ShapeInvariantModel(std::string name, Superpotential superpotential, RemainderSequence remainder,
                      double e0, Potential potential,
                      std::optional<int> bound_level_count = std::nullopt,
                      std::optional<PrintedAlgebra> printed_algebra = std::nullopt);

  const std::string& name() const noexcept { return name_; }
  const Superpotential& superpotential() const noexcept { return superpotential_; }
  const ParameterRule& rule() const noexcept { return remainder_.rule(); }
  const RemainderSequence& remainder() const noexcept { return remainder_; }
  double e0() const noexcept { return e0_; }
  const Potential& potential() const noexcept { return potential_; }
  const DomainSpec& domain() const noexcept { return potential_.domain(); }

  /// Number of normalizable levels of H(a_0); nullopt for an unbounded ladder.
  std::optional<int> bound_level_count() const noexcept { return bound_level_count_; }
  const std::optional<PrintedAlgebra>& printed_algebra() const noexcept { return printed_algebra_; }

  /// Copy with a different remainder function (same rule). Used to test alternative forms.
  ShapeInvariantModel with_remainder(std::function<double(double)> r, std::string name) const;

 private:
  std::string name_;
  Superpotential superpotential_;
  RemainderSequence remainder_;
  double e0_;
  Potential potential_;
  std::optional<int> bound_level_count_;
  std::optional<PrintedAlgebra> printed_algebra_;
};

/// V1 = W^2 - W', V2 = W^2 + W' at fixed parameter a (units hbar = 2m = 1).
std::pair<Potential, Potential> partner_potentials(const Superpotential& sp, double a);

/// max over grid of |V2(x; a_0) - V1(x; a_1) - R(a_1)|.
double shape_invariance_residual(const ShapeInvariantModel& model, const Grid& grid);

}  // namespace sipot
