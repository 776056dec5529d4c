#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace sipot {

enum class DomainKind { full_line, half_line, open_interval };

std::string to_string(DomainKind kind);

/// Open set on which a potential or a wavefunction lives.
struct DomainSpec {
  DomainKind kind = DomainKind::full_line;
  double lower = 0.0;
  double upper = 0.0;

  static DomainSpec full_line();
  /// (0, +inf)
  static DomainSpec half_line();
  /// (lower, upper) with both ends finite.
  static DomainSpec open_interval(double lower, double upper);

  bool is_interior(double x) const noexcept;
};

/// Ordered sample points inside a domain. Most consumers require uniform
/// spacing; mapped wavefunctions live on non-uniform grids.
class Grid {
 public:
  /// n points from `first` to `last` inclusive. Both must be interior.
  static Grid uniform(double first, double last, std::size_t n, const DomainSpec& domain);

  /// n points strictly inside (lower, upper), spacing (upper - lower) / (n + 1).
  /// Dirichlet truncation puts the implied zero boundary values at lower and upper.
  static Grid interior(double lower, double upper, std::size_t n, const DomainSpec& domain);

  /// Arbitrary strictly increasing points.
  static Grid from_points(std::vector<double> points, const DomainSpec& domain);

  std::span<const double> points() const noexcept { return points_; }
  double operator[](std::size_t i) const { return points_[i]; }
  std::size_t size() const noexcept { return points_.size(); }
  const DomainSpec& domain() const noexcept { return domain_; }

  bool is_uniform() const noexcept { return uniform_; }
  /// Uniform spacing; throws ArgumentError for non-uniform grids.
  double spacing() const;

 private:
  Grid(std::vector<double> points, const DomainSpec& domain);

  std::vector<double> points_;
  DomainSpec domain_;
  bool uniform_ = false;
  double spacing_ = 0.0;
};

}  // namespace sipot
