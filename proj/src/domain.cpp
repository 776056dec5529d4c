#include "sipot/domain.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "sipot/errors.hpp"

namespace sipot {

std::string to_string(DomainKind kind) {
  switch (kind) {
    case DomainKind::full_line:
      return "full-line";
    case DomainKind::half_line:
      return "half-line";
    case DomainKind::open_interval:
      return "open-interval";
  }
  return "unknown";
}

DomainSpec DomainSpec::full_line() {
  constexpr double inf = std::numeric_limits<double>::infinity();
  return {DomainKind::full_line, -inf, inf};
}

DomainSpec DomainSpec::half_line() {
  return {DomainKind::half_line, 0.0, std::numeric_limits<double>::infinity()};
}

DomainSpec DomainSpec::open_interval(double lower, double upper) {
  if (!std::isfinite(lower) || !std::isfinite(upper) || !(lower < upper)) {
    throw ArgumentError("open interval needs finite endpoints with lower < upper");
  }
  return {DomainKind::open_interval, lower, upper};
}

bool DomainSpec::is_interior(double x) const noexcept { return x > lower && x < upper; }

Grid::Grid(std::vector<double> points, const DomainSpec& domain)
    : points_(std::move(points)), domain_(domain) {
  if (points_.size() < 2) throw ArgumentError("grid needs at least two points");
  double scale = 1.0;
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (!std::isfinite(points_[i]) || !domain_.is_interior(points_[i])) {
      throw ArgumentError("grid point " + std::to_string(points_[i]) + " is not interior to the " +
                          to_string(domain_.kind) + " domain");
    }
    if (i > 0 && !(points_[i] > points_[i - 1])) {
      throw ArgumentError("grid points must be strictly increasing");
    }
    scale = std::max(scale, std::abs(points_[i]));
  }
  const double h = (points_.back() - points_.front()) / static_cast<double>(points_.size() - 1);
  const double tol = 1e-12 * scale;
  uniform_ = std::all_of(points_.begin() + 1, points_.end(), [&, prev = points_.front()](double x) mutable {
    const bool ok = std::abs((x - prev) - h) <= tol;
    prev = x;
    return ok;
  });
  spacing_ = h;
}

Grid Grid::uniform(double first, double last, std::size_t n, const DomainSpec& domain) {
  if (n < 2 || !(first < last)) throw ArgumentError("uniform grid needs n >= 2 and first < last");
  std::vector<double> pts(n);
  const double h = (last - first) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) pts[i] = first + h * static_cast<double>(i);
  pts.back() = last;
  return Grid(std::move(pts), domain);
}

Grid Grid::interior(double lower, double upper, std::size_t n, const DomainSpec& domain) {
  if (n < 2 || !(lower < upper)) throw ArgumentError("interior grid needs n >= 2 and lower < upper");
  std::vector<double> pts(n);
  const double h = (upper - lower) / static_cast<double>(n + 1);
  for (std::size_t i = 0; i < n; ++i) pts[i] = lower + h * static_cast<double>(i + 1);
  return Grid(std::move(pts), domain);
}

Grid Grid::from_points(std::vector<double> points, const DomainSpec& domain) {
  return Grid(std::move(points), domain);
}

double Grid::spacing() const {
  if (!uniform_) throw ArgumentError("grid is not uniform");
  return spacing_;
}

}  // namespace sipot
