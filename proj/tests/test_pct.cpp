#include <doctest.h>

#include <cmath>
#include <numbers>

#include "helpers.hpp"
#include "sipot/catalog.hpp"
#include "sipot/defaults.hpp"
#include "sipot/errors.hpp"
#include "sipot/oracle.hpp"
#include "sipot/pct.hpp"
#include "sipot/spectrum.hpp"

using namespace sipot;

namespace {

constexpr double half_pi = std::numbers::pi / 2;

double sec2(double z) { return 1.0 / (std::cos(z) * std::cos(z)); }
double csc2(double z) { return 1.0 / (std::sin(z) * std::sin(z)); }

double hulthen_image(double z, double e, double s = 1.0) {
  return 4.0 * (e - s) - 0.25 * (1.0 + 16.0 * e) * sec2(z) + 0.75 * csc2(z);
}

// Five-point derivative of an arbitrary function.
template <class F>
double d1(F f, double z, double h) {
  return (f(z - 2 * h) - 8 * f(z - h) + 8 * f(z + h) - f(z + 2 * h)) / (12 * h);
}

}  // namespace

TEST_SUITE("pct") {
  TEST_CASE("exp map values, weight and orientation") {
    const auto m = pct::builtin_exp_map();
    CHECK(m.f(0.0) == 1.0);
    CHECK(m.f1(0.0) == -1.0);
    CHECK(m.f2(0.0) == 1.0);
    CHECK(m.f3(0.0) == -1.0);
    for (double z : {-2.0, 0.3, 4.0}) CHECK(m.weight(z) == doctest::Approx(std::exp(-z / 2)).epsilon(1e-15));
    CHECK(m.orientation_reversing());
    CHECK(m.invert(std::exp(-1.7)) == doctest::Approx(1.7).epsilon(1e-14));
  }

  TEST_CASE("log-cos map values, limits and Schwarzian term") {
    const auto m = pct::builtin_logcos_map();
    CHECK(m.f(std::numbers::pi / 4) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
    CHECK(m.f1(std::numbers::pi / 4) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(m.f(1e-6) > 0.0);
    CHECK(m.f(1e-6) < 1e-11);
    CHECK(m.f(half_pi - 1e-9) > 40.0);
    CHECK_FALSE(m.orientation_reversing());
    for (double z : test::random_points(0.05, half_pi - 0.05, 50, 5)) {
      CHECK(m.schwarzian_term(z) == doctest::Approx(0.75 * csc2(z) - 0.25 * sec2(z)).epsilon(1e-12));
      CHECK(m.weight(z) == doctest::Approx(std::sqrt(2.0 * std::tan(z))).epsilon(1e-14));
    }
  }

  TEST_CASE("built-in map derivatives match finite differences") {
    for (const auto& m : {pct::builtin_exp_map(), pct::builtin_logcos_map()}) {
      const bool exp_map = m.name() == "exp";
      const auto zs = exp_map ? test::random_points(-2.0, 3.0, 30, 8) : test::random_points(0.1, 1.4, 30, 9);
      for (double z : zs) {
        const double h = 1e-3;
        auto f = [&](double t) { return m.f(t); };
        auto f1 = [&](double t) { return m.f1(t); };
        auto f2 = [&](double t) { return m.f2(t); };
        CHECK(d1(f, z, h) == doctest::Approx(m.f1(z)).epsilon(1e-6));
        CHECK(d1(f1, z, h) == doctest::Approx(m.f2(z)).epsilon(1e-6));
        CHECK(d1(f2, z, h) == doctest::Approx(m.f3(z)).epsilon(1e-6));
      }
    }
  }

  TEST_CASE("maps given only by f use extrapolated differences") {
    const auto m = pct::PCTMap::from_function("user-exp", [](double z) { return std::exp(-z); },
                                              DomainSpec::half_line(), DomainSpec::full_line());
    CHECK_FALSE(m.exact_derivatives());
    for (double z : {-1.0, 0.0, 0.8, 2.0}) {
      CHECK(m.f1(z) == doctest::Approx(-std::exp(-z)).epsilon(1e-4));
      CHECK(m.f2(z) == doctest::Approx(std::exp(-z)).epsilon(1e-4));
      CHECK(m.f3(z) == doctest::Approx(-std::exp(-z)).epsilon(1e-4));
    }
    CHECK(m.invert(0.5) == doctest::Approx(std::log(2.0)).epsilon(1e-10));
  }

  TEST_CASE("Hulthen image under log-cos at z = pi/4") {
    const double e = -0.25;
    const double z = std::numbers::pi / 4;
    const double value = pct::transform_potential(catalog::make_hulthen(1.0), e, pct::builtin_logcos_map(), z);
    CHECK(std::abs(value - (4 * (e - 1) - 0.25 * (1 + 16 * e) * 2 + 0.75 * 2)) < 1e-10);
  }

  TEST_CASE("Hulthen image identity at 50 random (z, E) pairs") {
    const auto zs = test::random_points(0.05, half_pi - 0.05, 50, 101);
    const auto es = test::random_points(-5.0, 5.0, 50, 102);
    const auto map = pct::builtin_logcos_map();
    for (double s : {1.0, 12.0}) {
      const auto v = catalog::make_hulthen(s);
      for (std::size_t i = 0; i < zs.size(); ++i) {
        CHECK(std::abs(pct::transform_potential(v, es[i], map, zs[i]) - hulthen_image(zs[i], es[i], s)) < 1e-10);
      }
    }
  }

  TEST_CASE("exp image of the inverse-power family") {
    const auto map = pct::builtin_exp_map();
    for (double z : test::random_points(-2.0, 3.0, 40, 55)) {
      const double alpha = 1.3, beta = 0.4, gamma = -0.2, e = 0.35;
      const auto v = catalog::make_inverse_power(alpha, beta, gamma);
      const double expected = (gamma - e) * std::exp(-2 * z) - alpha * std::exp(-z) + beta + 0.25;
      CHECK(pct::transform_potential(v, e, map, z) == doctest::Approx(expected).epsilon(1e-12));
    }
  }

  TEST_CASE("exp image is an exact combination of exp(-2z), exp(-z), 1") {
    const auto map = pct::builtin_exp_map();
    const auto fit_points = test::random_points(-2.0, 3.0, 25, 61);
    const auto fresh = test::random_points(-2.0, 3.0, 25, 62);
    for (const auto& v : {catalog::make_kratzer(), catalog::make_coulomb_effective(1.0, 0),
                          catalog::make_coulomb_effective(2.0, 1), catalog::make_inverse_power(0.5, 3.0, 1.0)}) {
      for (double e : {-0.3, 0.0, 0.1875}) {
        const auto fit = pct::fit_image(v, e, map, pct::morse_basis(), fit_points, fresh);
        CHECK(fit.max_check_error < 1e-10);
      }
    }
  }

  TEST_CASE("identity map leaves V - E unchanged") {
    const pct::PCTMap identity("identity", [](double z) { return z; }, [](double) { return 1.0; },
                               [](double) { return 0.0; }, [](double) { return 0.0; }, [](double x) { return x; },
                               DomainSpec::half_line(), DomainSpec::half_line());
    const auto v = catalog::make_kratzer();
    for (double z : {0.3, 1.0, 7.5}) CHECK(pct::transform_potential(v, 0.2, identity, z) == v(z) - 0.2);
  }

  TEST_CASE("singular and out-of-domain maps are reported") {
    const pct::PCTMap cubic("cubic", [](double z) { return z * z * z; }, [](double z) { return 3 * z * z; },
                            [](double z) { return 6 * z; }, [](double) { return 6.0; }, {},
                            DomainSpec::full_line(), DomainSpec::full_line());
    const auto harmonic = catalog::make_harmonic();
    CHECK_THROWS_AS(pct::transform_potential(harmonic, 0.0, cubic, 0.0), SingularMapError);
    CHECK_THROWS_AS(pct::transform_potential(catalog::make_hulthen(), 0.0, pct::builtin_logcos_map(), 2.0), DomainError);
    CHECK_THROWS_AS(pct::builtin_map_by_name("sqrt"), ArgumentError);
    const Grid g = Grid::uniform(-1.0, 1.0, 11, DomainSpec::full_line());
    const pct::PCTMap fold("fold", [](double z) { return z * z + 1.0; }, [](double z) { return 2 * z; },
                           [](double) { return 2.0; }, [](double) { return 0.0; }, {}, DomainSpec::half_line(),
                           DomainSpec::full_line());
    std::vector<double> ones(11, 1.0);
    CHECK_THROWS_AS(pct::map_wavefunction(WaveFunction(g, ones), fold), SingularMapError);
  }

  TEST_CASE("first-derivative term vanishes only with the sqrt|f'| weight") {
    // x-second derivative of psi = g u rewritten in z: f'^2/g * psi_xx = u'' + a u' + b u.
    // With two test functions a(z) and b(z) can be solved pointwise.
    const auto map = pct::builtin_logcos_map();
    auto coefficient = [&](auto weight) {
      auto u1 = [](double z) { return std::sin(3 * z) + 2.0; };
      auto u2 = [](double z) { return std::exp(z / 3) + z * z; };
      double worst = 0.0;
      for (double z : test::random_points(0.3, 1.2, 20, 17)) {
        const double h = 1e-3;
        auto residual = [&](auto u) {
          auto psi_z = [&](double t) { return d1([&](double s) { return weight(s) * u(s); }, t, h) / map.f1(t); };
          const double psi_xx = d1(psi_z, z, h) / map.f1(z);
          const double u2nd = d1([&](double t) { return d1(u, t, h); }, z, h);
          return map.f1(z) * map.f1(z) / weight(z) * psi_xx - u2nd;
        };
        const double r1 = residual(u1), r2 = residual(u2);
        const double p1 = d1(u1, z, h), p2 = d1(u2, z, h);
        const double q1 = u1(z), q2 = u2(z);
        const double a = (r1 * q2 - r2 * q1) / (p1 * q2 - p2 * q1);
        worst = std::max(worst, std::abs(a));
      }
      return worst;
    };
    CHECK(coefficient([&](double z) { return map.weight(z); }) < 1e-6);
    CHECK(coefficient([&](double z) { return std::pow(map.f1(z), 0.3); }) > 1e-2);
  }

  TEST_CASE("mapping wavefunctions") {
    const auto exp_map = pct::builtin_exp_map();
    const Grid zg = Grid::uniform(-2.0, 3.0, 200, DomainSpec::full_line());
    std::vector<double> zeros(zg.size(), 0.0);
    const auto mapped_zero = pct::map_wavefunction(WaveFunction(zg, zeros), exp_map);
    for (double v : mapped_zero.psi.values()) CHECK(v == 0.0);

    auto phi = [](double x) { return std::exp(-x) * (1.0 + x); };
    std::vector<double> vals;
    for (double z : zg.points()) vals.push_back(std::exp(-z / 2) * phi(std::exp(-z)));
    const auto mapped = pct::map_wavefunction(WaveFunction(zg, vals), exp_map);
    CHECK(mapped.reversed);
    const auto& xg = mapped.psi.grid();
    for (std::size_t i = 1; i < xg.size(); ++i) CHECK(xg[i] > xg[i - 1]);
    for (std::size_t i = 0; i < xg.size(); ++i) CHECK(mapped.psi[i] == doctest::Approx(xg[i] * phi(xg[i])).epsilon(1e-12));
  }

  TEST_CASE("PT1 ground state mapped by log-cos vanishes at the origin") {
    const auto pt1 = catalog::make_pt1(2.0, 3.0);
    const auto psi = ground_state(pt1, defaults::wavefunction_grid(pt1));
    const auto mapped = pct::map_wavefunction(psi, pct::builtin_logcos_map());
    double peak = 0.0;
    for (double v : mapped.psi.values()) peak = std::max(peak, std::abs(v));
    CHECK_FALSE(mapped.reversed);
    CHECK(mapped.psi.grid()[0] > 0.0);
    CHECK(std::abs(mapped.psi[0]) < 1e-8 * peak);
    CHECK(std::isfinite(mapped.psi.norm()));
  }

  TEST_CASE("residual check of an oracle eigenpair is at rounding level") {
    const auto v = catalog::make_harmonic();
    const auto res = oracle::solve_bound_states(v, Grid::interior(-8.0, 8.0, 2000, v.domain()), 2);
    for (int n = 0; n < 2; ++n) {
      CHECK(pct::residual_check(v, res.spectrum.entries()[n].energy, res.wavefunctions[n]) < 1e-8);
    }
    const Grid tiny = Grid::uniform(0.0, 1.0, 7, DomainSpec::full_line());
    CHECK_THROWS_AS(pct::residual_check(v, 0.0, WaveFunction(tiny, std::vector<double>(7, 1.0))), ArgumentError);
  }

  TEST_CASE("Coulomb and Hulthen eigenpairs transport through the maps") {
    {
      const auto v = catalog::make_coulomb_effective(1.0, 0);
      const Grid grid = defaults::oracle_grid("coulomb", v.domain());
      const auto res = oracle::solve_bound_states(v, grid, 2);
      const auto map = pct::builtin_exp_map();
      const Grid zg = Grid::uniform(-std::log(100.0), -std::log(3 * grid[0]), 4000, DomainSpec::full_line());
      for (int n = 0; n < 2; ++n) {
        const double e = res.spectrum.entries()[n].energy;
        // (gamma - E) e^{-2z} - alpha e^{-z} at eigenvalue -(beta + 1/4)
        Potential target([e](double z) { return (0.25 - e) * std::exp(-2 * z) - std::exp(-z); },
                         DomainSpec::full_line(), {}, "image");
        CHECK(pct::residual_check(target, -0.25, pct::pull_back(res.wavefunctions[n], map, zg)) < 1e-4);
      }
    }
    {
      const double s = 12.0;
      const auto v = catalog::make_hulthen(s);
      const Grid grid = defaults::oracle_grid("hulthen", v.domain());
      const auto res = oracle::solve_bound_states(v, grid, 2);
      const auto map = pct::builtin_logcos_map();
      for (int n = 0; n < 2; ++n) {
        const double e = res.spectrum.entries()[n].energy;
        const auto pt1 = catalog::make_pt1(0.5 + 2 * std::sqrt(-e), 1.5);
        const double mapped = -std::pow(pt1.rule().a0() + 1.5, 2) - 4 * (e - s);
        const double exact = catalog::levels::pt1(pt1.rule().a0(), 1.5, n);
        CHECK(std::abs(mapped - exact) < 1e-4 * (1.0 + std::abs(exact)));
        const Grid zg = Grid::uniform(std::acos(std::exp(-1.5 * grid[0])), std::acos(std::exp(-5.0)), 8000, pt1.domain());
        CHECK(pct::residual_check(pt1.potential(), mapped, pct::pull_back(res.wavefunctions[n], map, zg)) < 1e-4);
      }
    }
  }

  TEST_CASE("algebraic PT1 eigenfunction pushed to the half-line solves the Hulthen problem") {
    const double s = 12.0;
    const double e = -4.0;
    const auto pt1 = catalog::make_pt1(0.5 + 2 * std::sqrt(-e), 1.5);
    const auto psi_tilde = eigenstate(pt1, defaults::wavefunction_grid(pt1), 1);
    const auto hulthen = catalog::make_hulthen(s);
    const Grid rg = Grid::uniform(0.05, 5.0, 8000, hulthen.domain());
    const auto psi = pct::push_forward(psi_tilde, pct::builtin_logcos_map(), rg);
    CHECK(pct::residual_check(hulthen, e, psi) < 1e-4);
    CHECK(node_count(psi) == 1);
  }
}
