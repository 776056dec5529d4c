#include "sipot/ladder.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "sipot/errors.hpp"

namespace sipot::ladder {

namespace {

using MatrixX = MatrixXld;
using VectorX = VectorXld;

MatrixX commutator(const MatrixX& a, const MatrixX& b) { return a * b - b * a; }

MatrixX identity(Eigen::Index n) { return MatrixX::Identity(n, n); }

double interior_max(const MatrixX& m) {
  const Eigen::Index k = m.rows() - 2;
  return k > 0 ? static_cast<double>(m.topLeftCorner(k, k).cwiseAbs().maxCoeff()) : 0.0;
}

double edge_max(const MatrixX& m) {
  const Eigen::Index n = m.rows();
  long double worst = 0.0L;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (i >= n - 2 || j >= n - 2) worst = std::max(worst, std::abs(m(i, j)));
    }
  }
  return static_cast<double>(worst);
}

// diag(E_{n+m} - E_n); zero where n + m leaves the truncation (B+^m vanishes there).
MatrixX level_gaps(const VectorX& energies, int m) {
  const Eigen::Index n = energies.size();
  VectorX gaps = VectorX::Zero(n);
  for (Eigen::Index i = 0; i + m < n; ++i) gaps(i) = energies(i + m) - energies(i);
  return gaps.asDiagonal();
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

}  // namespace

std::string to_string(RemainderConvention c) {
  return c == RemainderConvention::after_shift ? "after-shift" : "before-shift";
}

std::string to_string(AlgebraClass c) {
  switch (c) {
    case AlgebraClass::su11:
      return "su(1,1)";
    case AlgebraClass::su2:
      return "su(2)";
    case AlgebraClass::heisenberg:
      return "heisenberg";
    case AlgebraClass::non_constant_spacing:
      return "non-constant-spacing";
  }
  return "unknown";
}

TruncatedLadderRep::TruncatedLadderRep(MatrixXld b_plus, VectorXld rho, VectorXld energies,
                                       long double e0, RemainderConvention convention)
    : b_plus_(std::move(b_plus)),
      b_minus_(b_plus_.transpose()),
      rho_(std::move(rho)),
      energies_(std::move(energies)),
      e0_(e0),
      convention_(convention) {}

MatrixXld TruncatedLadderRep::hamiltonian_extended() const {
  return b_plus_ * b_minus_ + e0_ * identity(b_plus_.rows());
}

TruncatedLadderRep build_rep(const ShapeInvariantModel& model, int n_dim,
                             RemainderConvention convention) {
  if (n_dim < 4) throw ArgumentError("ladder truncation needs n_dim >= 4");
  const RemainderSequence& r = model.remainder();
  VectorX partial = VectorX::Zero(n_dim);
  for (int n = 1; n < n_dim; ++n) {
    partial(n) = partial(n - 1) + static_cast<long double>(r.at(n));
    const bool beyond_bound = model.bound_level_count() && n >= *model.bound_level_count();
    if (beyond_bound || !(partial(n) > 0.0L)) {
      throw TruncationTooLargeError("truncation " + std::to_string(n_dim) + " of " + model.name() +
                                        " reaches unbound level " + std::to_string(n),
                                    n);
    }
  }
  MatrixX b_plus = MatrixX::Zero(n_dim, n_dim);
  for (int n = 0; n + 1 < n_dim; ++n) b_plus(n + 1, n) = std::sqrt(partial(n + 1));
  VectorX rho(n_dim);
  for (int n = 0; n < n_dim; ++n) {
    rho(n) = convention == RemainderConvention::after_shift ? r.at(n + 1) : r.at(n);
  }
  const long double e0 = model.e0();
  VectorX energies = partial.array() + e0;
  return {std::move(b_plus), std::move(rho), std::move(energies), e0, convention};
}

double CommutatorResiduals::max() const {
  return std::max({lowering_raising, hamiltonian_raising, hamiltonian_lowering, remainder_shift,
                   double_commutator, double_commutator_pattern});
}

CommutatorResiduals commutator_residuals(const TruncatedLadderRep& rep) {
  const MatrixX& bp = rep.b_plus_extended();
  const MatrixX& bm = rep.b_minus_extended();
  const VectorX& rd = rep.rho_extended();
  const MatrixX rho = rd.asDiagonal();
  const MatrixX h = rep.hamiltonian_extended();
  const Eigen::Index n = bp.rows();

  CommutatorResiduals out;
  auto track = [&](double& slot, const MatrixX& m) {
    slot = std::max(slot, interior_max(m));
    out.edge = std::max(out.edge, edge_max(m));
  };

  track(out.lowering_raising, commutator(bm, bp) - rho);

  const MatrixX gaps = level_gaps(rep.energies_extended(), 1);
  track(out.hamiltonian_raising, commutator(h, bp) - bp * gaps);
  track(out.hamiltonian_lowering, commutator(h, bm) + gaps * bm);

  MatrixX bp_power = bp;
  MatrixX bm_power = bm;
  for (int m = 2; m <= 3; ++m) {
    bp_power = bp_power * bp;
    bm_power = bm_power * bm;
    const MatrixX gaps_m = level_gaps(rep.energies_extended(), m);
    const MatrixX product = h * bp_power;
    const double scale = std::max(1.0, static_cast<double>(product.cwiseAbs().maxCoeff()));
    const double worst = std::max(interior_max(commutator(h, bp_power) - bp_power * gaps_m),
                                  interior_max(commutator(h, bm_power) + gaps_m * bm_power));
    out.hamiltonian_powers_relative = std::max(out.hamiltonian_powers_relative, worst / scale);
  }

  VectorX first_diff = VectorX::Zero(n);
  VectorX second_diff = VectorX::Zero(n);
  for (Eigen::Index i = 0; i + 1 < n; ++i) first_diff(i) = rd(i + 1) - rd(i);
  for (Eigen::Index i = 0; i + 2 < n; ++i) second_diff(i) = rd(i) - 2.0L * rd(i + 1) + rd(i + 2);
  const MatrixX shift = commutator(bp, rho);
  track(out.remainder_shift, shift + bp * first_diff.asDiagonal());

  const MatrixX dbl = commutator(bp, shift);
  track(out.double_commutator, dbl);
  track(out.double_commutator_pattern, dbl - bp * bp * second_diff.asDiagonal());
  return out;
}

AlgebraReport classify_algebra(const ShapeInvariantModel& model, int n_dim,
                               RemainderConvention convention) {
  int dim = n_dim;
  if (model.bound_level_count()) dim = std::min(dim, *model.bound_level_count());
  const TruncatedLadderRep rep = build_rep(model, dim, convention);
  const RemainderSequence& r = model.remainder();

  AlgebraReport report;
  report.n_dim = dim;
  double r_scale = 1.0;
  for (int k = 0; k <= dim; ++k) r_scale = std::max(r_scale, std::abs(r.at(k)));
  const double d = r.at(1) - r.at(0);
  bool constant = true;
  for (int k = 2; k <= dim; ++k) {
    constant = constant && std::abs((r.at(k) - r.at(k - 1)) - d) <= 1e-12 * r_scale;
  }
  report.spacing_d = d;

  const MatrixX& bp = rep.b_plus_extended();
  const MatrixX& bm = rep.b_minus_extended();
  const MatrixX rho = rep.rho_extended().asDiagonal();
  const Eigen::Index n = bp.rows();

  if (!constant) {
    report.classification = AlgebraClass::non_constant_spacing;
    report.max_interior_residual = commutator_residuals(rep).max();
    report.note = "remainder spacing is not constant; no closed three-generator algebra";
  } else if (std::abs(d) <= 1e-12 * r_scale) {
    report.classification = AlgebraClass::heisenberg;
    report.kpm_scale = 1.0;
    const MatrixX central = static_cast<long double>(r.at(1)) * identity(n);
    report.max_interior_residual = interior_max(commutator(bm, bp) - central);
    report.note = "zero spacing: [B-, B+] is a constant multiple of the identity";
  } else {
    report.k0_scale = 1.0 / d;
    report.kpm_scale = std::sqrt(2.0 / std::abs(d));
    const long double d_ext = static_cast<long double>(r.at(1)) - r.at(0);
    const long double kappa = std::sqrt(2.0L / std::abs(d_ext));
    const MatrixX k0 = rho / d_ext;
    const MatrixX kp = kappa * bp;
    const MatrixX km = kappa * bm;
    const double ladder = std::max(interior_max(commutator(k0, kp) - kp),
                                   interior_max(commutator(k0, km) + km));
    const MatrixX bracket = commutator(kp, km);
    const double plus = interior_max(bracket - 2.0L * k0);
    const double minus = interior_max(bracket + 2.0L * k0);
    report.bracket_sign = plus <= minus ? 1 : -1;
    report.classification = plus <= minus ? AlgebraClass::su2 : AlgebraClass::su11;
    report.max_interior_residual = std::max(ladder, std::min(plus, minus));
  }

  if (const auto& printed = model.printed_algebra()) {
    report.has_printed = true;
    report.printed_label = printed->label;
    report.printed_k0_scale = printed->k0_scale;
    report.printed_kpm_scale = printed->kpm_scale;
    report.printed_label_matches = printed->label == to_string(report.classification);
    const bool scales_defined = report.classification == AlgebraClass::su2 ||
                                report.classification == AlgebraClass::su11;
    report.printed_scales_match =
        scales_defined && std::abs(std::abs(printed->k0_scale) - std::abs(report.k0_scale)) <= 1e-12 &&
        std::abs(printed->kpm_scale - report.kpm_scale) <= 1e-12;
    const MatrixX k0 = static_cast<long double>(printed->k0_scale) * rho;
    const MatrixX kp = static_cast<long double>(printed->kpm_scale) * bp;
    const MatrixX km = static_cast<long double>(printed->kpm_scale) * bm;
    const long double sign = printed->label == "su(2)" ? 1.0L : -1.0L;
    report.printed_closure_residual =
        std::max({interior_max(commutator(k0, kp) - kp), interior_max(commutator(k0, km) + km),
                  interior_max(commutator(kp, km) - sign * 2.0L * k0)});

    std::ostringstream note;
    if (!report.note.empty()) note << report.note << "; ";
    note << "derived K0 = " << fmt(report.k0_scale) << " rho, K+- = " << fmt(report.kpm_scale)
         << " B+- close with [K+,K-] = " << (report.bracket_sign >= 0 ? "+" : "-") << "2 K0 ("
         << to_string(report.classification) << "); printed factors K0 = " << fmt(printed->k0_scale)
         << " R, K+- = " << fmt(printed->kpm_scale) << " B+- labelled " << printed->label;
    note << (report.printed_scales_match ? " match the derived scale magnitudes"
                                         : " do not match the derived scales");
    note << "; printed closure residual " << fmt(report.printed_closure_residual);
    report.note = note.str();
  }
  return report;
}

}  // namespace sipot::ladder
