#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "sipot/model.hpp"

namespace sipot::ladder {

/// How the remainder operator R(a_0) acts on the n-th eigenstate.
/// after_shift: rho_n = R(a_{n+1}); before_shift: rho_n = R(a_n).
enum class RemainderConvention { after_shift, before_shift };

std::string to_string(RemainderConvention c);

using MatrixXld = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
using VectorXld = Eigen::Matrix<long double, Eigen::Dynamic, 1>;

/// N x N truncation of B+, B- and the remainder operator in the eigenbasis of H(a_0).
/// B+ is nonzero only at (n+1, n), where it equals sqrt(R(a_1) + ... + R(a_{n+1})).
/// Entries are held in extended precision so that identities between products of
/// large entries can be checked well below double resolution; the double accessors round.
class TruncatedLadderRep {
 public:
  TruncatedLadderRep(MatrixXld b_plus, VectorXld rho, VectorXld energies, long double e0,
                     RemainderConvention convention);

  int n_dim() const noexcept { return static_cast<int>(b_plus_.rows()); }
  Eigen::MatrixXd b_plus() const { return b_plus_.cast<double>(); }
  Eigen::MatrixXd b_minus() const { return b_minus_.cast<double>(); }
  /// Diagonal matrix of the remainder operator.
  Eigen::MatrixXd rho() const { return rho_.cast<double>().asDiagonal(); }
  Eigen::VectorXd rho_diagonal() const { return rho_.cast<double>(); }
  /// E_0 .. E_{N-1}
  Eigen::VectorXd energies() const { return energies_.cast<double>(); }
  double e0() const noexcept { return static_cast<double>(e0_); }
  RemainderConvention convention() const noexcept { return convention_; }

  /// B+ B- + e0 I.
  Eigen::MatrixXd hamiltonian() const { return hamiltonian_extended().cast<double>(); }

  const MatrixXld& b_plus_extended() const noexcept { return b_plus_; }
  const MatrixXld& b_minus_extended() const noexcept { return b_minus_; }
  const VectorXld& rho_extended() const noexcept { return rho_; }
  const VectorXld& energies_extended() const noexcept { return energies_; }
  MatrixXld hamiltonian_extended() const;

 private:
  MatrixXld b_plus_;
  MatrixXld b_minus_;
  VectorXld rho_;
  VectorXld energies_;
  long double e0_;
  RemainderConvention convention_;
};

/// Requires n_dim >= 4 and every level below n_dim bound with a positive partial sum;
/// otherwise TruncationTooLargeError naming the first offending level.
TruncatedLadderRep build_rep(const ShapeInvariantModel& model, int n_dim,
                             RemainderConvention convention = RemainderConvention::after_shift);

/// Max absolute entries over interior indices 0 <= i, j <= N-3.
struct CommutatorResiduals {
  /// [B-, B+] - rho
  double lowering_raising = 0.0;
  /// [H, B+] - B+ D, D = diag(E_{n+1} - E_n)
  double hamiltonian_raising = 0.0;
  /// [H, B-] + D B-
  double hamiltonian_lowering = 0.0;
  /// [H, B+^m] - B+^m D_m and the lowering counterpart for m = 2, 3, D_m = diag(E_{n+m} - E_n),
  /// relative to the largest entry of H B+^m. Not part of max().
  double hamiltonian_powers_relative = 0.0;
  /// [B+, rho] + B+ diag(rho_{n+1} - rho_n)
  double remainder_shift = 0.0;
  /// [B+, [B+, rho]] itself; vanishes iff the spacing is constant.
  double double_commutator = 0.0;
  /// [B+, [B+, rho]] - B+^2 diag(rho_n - 2 rho_{n+1} + rho_{n+2})
  double double_commutator_pattern = 0.0;
  /// Same identities restricted to the last two rows/columns; not expected small.
  double edge = 0.0;

  /// Max over all interior entries, including double_commutator.
  double max() const;
};

CommutatorResiduals commutator_residuals(const TruncatedLadderRep& rep);

enum class AlgebraClass { su11, su2, heisenberg, non_constant_spacing };

std::string to_string(AlgebraClass c);

struct AlgebraReport {
  int n_dim = 0;
  double spacing_d = 0.0;
  AlgebraClass classification = AlgebraClass::non_constant_spacing;
  /// K0 = k0_scale * rho
  double k0_scale = 0.0;
  /// K+- = kpm_scale * B+-
  double kpm_scale = 0.0;
  /// s in [K+, K-] = s * 2 K0 (+1 su(2), -1 su(1,1), 0 otherwise)
  int bracket_sign = 0;
  double max_interior_residual = 0.0;

  bool has_printed = false;
  std::string printed_label;
  double printed_k0_scale = 0.0;
  double printed_kpm_scale = 0.0;
  /// |printed k0| == |k0_scale| and printed kpm == kpm_scale.
  bool printed_scales_match = false;
  /// Closure residual of the printed factors against the printed label's relations.
  double printed_closure_residual = 0.0;
  bool printed_label_matches = false;
  std::string note;
};

/// Solves K0 = rho / d, K+- = sqrt(2/|d|) B+- and reports which bracket closes.
/// n_dim is capped at the model's bound-level count.
AlgebraReport classify_algebra(const ShapeInvariantModel& model, int n_dim,
                               RemainderConvention convention = RemainderConvention::after_shift);

}  // namespace sipot::ladder
