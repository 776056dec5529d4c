#include "sipot/catalog.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "sipot/errors.hpp"

namespace sipot::catalog {

namespace {

std::string fmt(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

double param_or(const std::map<std::string, double>& params, const std::string& key,
                double fallback) {
  const auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

int morse_level_count(double a0) { return static_cast<int>(std::ceil(a0)); }

ShapeInvariantModel morse_model(double b, std::function<double(double)> remainder,
                                const std::string& remainder_tag) {
  if (!(b > 0.5) || !std::isfinite(b)) {
    throw NoBoundStateError("Morse potential needs b > 1/2 for a bound state (b = " + fmt(b) + ")");
  }
  const double a0 = b - 0.5;
  Superpotential w([](long double z, long double a) { return a - std::exp(-z); },
                   [](long double z, long double) { return std::exp(-z); }, DomainSpec::full_line());
  Potential v(
      [b](double z) {
        const double e = std::exp(-z);
        return e * e - 2.0 * b * e;
      },
      DomainSpec::full_line(), {{"b", b}},
      "morse(b=" + fmt(b) + "); " + remainder_tag);
  return {"morse",
          std::move(w),
          RemainderSequence(std::move(remainder), ParameterRule::translation(a0, -1.0)),
          -a0 * a0,
          std::move(v),
          morse_level_count(a0),
          PrintedAlgebra{"su(1,1)", 0.25, 1.0 / std::numbers::sqrt2}};
}

}  // namespace

ShapeInvariantModel make_morse(double b) {
  return morse_model(
      b, [](double a) { return 2.0 * a + 1.0; },
      "remainder R(a) = 2a + 1 (printed form R(a) = 2(a - 1))");
}

ShapeInvariantModel make_morse_printed_remainder(double b) {
  auto model = morse_model(
      b, [](double a) { return 2.0 * (a - 1.0); }, "printed remainder R(a) = 2(a - 1)");
  return model.with_remainder([](double a) { return 2.0 * (a - 1.0); }, "morse-printed-remainder");
}

ShapeInvariantModel make_pt1(double A, double B) {
  if (!(A > 1.0) || !(B > 1.0) || !std::isfinite(A) || !std::isfinite(B)) {
    throw UnsupportedParameterError("Poschl-Teller I needs A > 1 and B > 1 (A = " + fmt(A) +
                                    ", B = " + fmt(B) + ")");
  }
  const double db = B - A;
  const DomainSpec domain = DomainSpec::open_interval(0.0, std::numbers::pi / 2);
  Superpotential w(
      [db](long double z, long double a) { return a * std::tan(z) - (a + db) / std::tan(z); },
      [db](long double z, long double a) {
        const long double c = std::cos(z);
        const long double s = std::sin(z);
        return a / (c * c) + (a + db) / (s * s);
      },
      domain);
  Potential v(
      [A, B](double z) {
        const double c = std::cos(z);
        const double s = std::sin(z);
        return -(A + B) * (A + B) + A * (A - 1.0) / (c * c) + B * (B - 1.0) / (s * s);
      },
      domain, {{"A", A}, {"B", B}}, "pt1(A=" + fmt(A) + ", B=" + fmt(B) + ")");
  // a_n = A + n, so 2n + A + B - 1 = 2a - A + B - 1
  auto remainder = [A, B](double a) { return 4.0 * (2.0 * a - A + B - 1.0); };
  return {"pt1",
          std::move(w),
          RemainderSequence(remainder, ParameterRule::translation(A, 1.0)),
          0.0,
          std::move(v),
          std::nullopt,
          PrintedAlgebra{"su(2)", -0.125, 0.5}};
}

Potential make_inverse_power(double alpha, double beta, double gamma) {
  return Potential([alpha, beta, gamma](double x) { return -alpha / x + beta / (x * x) + gamma; },
                   DomainSpec::half_line(), {{"alpha", alpha}, {"beta", beta}, {"gamma", gamma}},
                   "inverse-power(alpha=" + fmt(alpha) + ", beta=" + fmt(beta) +
                       ", gamma=" + fmt(gamma) + ")");
}

Potential make_coulomb_effective(double e2, int l) {
  if (!(e2 > 0.0) || l < 0) throw ArgumentError("coulomb needs e2 > 0 and l >= 0");
  const double ll = static_cast<double>(l);
  const double shift = e2 * e2 / (4.0 * (ll + 1.0) * (ll + 1.0));
  Potential base = make_inverse_power(e2, ll * (ll + 1.0), shift);
  return Potential([base](double x) { return base.evaluate(x); }, DomainSpec::half_line(),
                   {{"e2", e2}, {"l", ll}}, "coulomb(e2=" + fmt(e2) + ", l=" + std::to_string(l) + ")");
}

Potential make_kratzer() {
  Potential base = make_inverse_power(1.0, 1.0, 0.0);
  return Potential([base](double x) { return base.evaluate(x); }, DomainSpec::half_line(),
                   {{"alpha", 1.0}, {"beta", 1.0}, {"gamma", 0.0}}, "kratzer");
}

Potential make_hulthen(double strength) {
  if (!(strength > 0.0)) throw ArgumentError("hulthen needs strength > 0");
  return Potential(
      [strength](double r) {
        // e^{-r} / (1 - e^{-r}) = 1 / expm1(r)
        return -strength / std::expm1(r);
      },
      DomainSpec::half_line(), {{"strength", strength}}, "hulthen(strength=" + fmt(strength) + ")");
}

Potential make_harmonic() {
  return Potential([](double x) { return x * x; }, DomainSpec::full_line(), {}, "harmonic");
}

namespace levels {

double coulomb_effective(double e2, int l, int n) {
  const double l1 = l + 1.0;
  const double nl1 = n + l + 1.0;
  return e2 * e2 / 4.0 * (1.0 / (l1 * l1) - 1.0 / (nl1 * nl1));
}

double kratzer(int n) {
  const double lp = (std::sqrt(5.0) - 1.0) / 2.0;
  const double k = n + lp + 1.0;
  return -1.0 / (4.0 * k * k);
}

double hulthen(double strength, int n) {
  const double big_n = n + 1.0;
  const double k = (strength - big_n * big_n) / (2.0 * big_n);
  return -k * k;
}

double morse(double b, int n) {
  const double a = b - n - 0.5;
  return -a * a;
}

double pt1(double A, double B, int n) {
  const double s = A + B;
  return (s + 2.0 * n) * (s + 2.0 * n) - s * s;
}

}  // namespace levels

std::vector<std::string> potential_names() {
  return {"morse", "pt1", "coulomb", "kratzer", "hulthen", "inverse-power", "harmonic"};
}

std::vector<std::string> model_names() { return {"morse", "pt1"}; }

Potential potential_by_name(const std::string& name, const std::map<std::string, double>& params) {
  if (name == "morse" || name == "pt1") return model_by_name(name, params).potential();
  if (name == "coulomb") {
    const double l = param_or(params, "l", 0.0);
    if (l != std::floor(l)) throw ArgumentError("coulomb l must be an integer");
    return make_coulomb_effective(param_or(params, "e2", 1.0), static_cast<int>(l));
  }
  if (name == "kratzer") return make_kratzer();
  if (name == "hulthen") return make_hulthen(param_or(params, "strength", 1.0));
  if (name == "inverse-power") {
    return make_inverse_power(param_or(params, "alpha", 1.0), param_or(params, "beta", 1.0),
                              param_or(params, "gamma", 0.0));
  }
  if (name == "harmonic") return make_harmonic();
  throw ArgumentError("unknown potential '" + name + "'");
}

ShapeInvariantModel model_by_name(const std::string& name, const std::map<std::string, double>& params) {
  if (name == "morse") return make_morse(param_or(params, "b", 5.0));
  if (name == "pt1") return make_pt1(param_or(params, "A", 2.0), param_or(params, "B", 3.0));
  throw ArgumentError("unknown shape-invariant model '" + name + "' (expected morse or pt1)");
}

}  // namespace sipot::catalog
