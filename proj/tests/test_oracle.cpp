#include <doctest.h>

#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "sipot/catalog.hpp"
#include "sipot/defaults.hpp"
#include "sipot/errors.hpp"
#include "sipot/oracle.hpp"

using namespace sipot;

namespace {

Spectrum make_spectrum(std::vector<double> energies, Provenance p = Provenance::oracle) {
  std::vector<SpectrumEntry> entries;
  for (std::size_t n = 0; n < energies.size(); ++n) entries.push_back({static_cast<int>(n), energies[n]});
  return {std::move(entries), p};
}

}  // namespace

TEST_SUITE("oracle") {
  TEST_CASE("harmonic oscillator levels are odd integers") {
    const auto v = catalog::make_harmonic();
    const auto res = oracle::solve_bound_states(v, defaults::oracle_grid("harmonic", v.domain()), 3);
    CHECK(res.spectrum.provenance() == Provenance::oracle);
    for (int n = 0; n < 3; ++n) CHECK(std::abs(res.spectrum.entries()[n].energy - (2 * n + 1)) < 1e-5);
  }

  TEST_CASE("halving the spacing cuts the error about fourfold") {
    const auto v = catalog::make_harmonic();
    const auto coarse = oracle::solve_bound_states(v, Grid::interior(-10.0, 10.0, 2000, v.domain()), 3);
    const auto fine = oracle::solve_bound_states(v, Grid::interior(-10.0, 10.0, 4001, v.domain()), 3);
    for (int n = 0; n < 3; ++n) {
      const double e_coarse = std::abs(coarse.spectrum.entries()[n].energy - (2 * n + 1));
      const double e_fine = std::abs(fine.spectrum.entries()[n].energy - (2 * n + 1));
      CHECK(e_coarse / e_fine == doctest::Approx(4.0).epsilon(0.05));
    }
  }

  TEST_CASE("Morse and PT1 agree with the algebraic levels") {
    {
      const auto model = catalog::make_morse(5.0);
      const auto res = oracle::solve_bound_states(model.potential(), defaults::oracle_grid("morse", model.domain()), 5);
      const auto report = oracle::compare_spectra(algebraic_levels(model, 4), res.spectrum, 1e-5, 0.0);
      CHECK(report.all_pass);
      CHECK(report.levels.size() == 5);
      for (bool b : res.bound) CHECK(b);
    }
    {
      const auto model = catalog::make_pt1(2.0, 3.0);
      const auto res = oracle::solve_bound_states(model.potential(), defaults::oracle_grid("pt1", model.domain()), 6);
      CHECK(oracle::compare_spectra(algebraic_levels(model, 5), res.spectrum, 1e-5, 1e-4).all_pass);
    }
  }

  TEST_CASE("Coulomb-effective levels") {
    const auto v = catalog::make_coulomb_effective(1.0, 1);
    const auto res = oracle::solve_bound_states(v, defaults::oracle_grid("coulomb", v.domain()), 3);
    for (int n = 0; n < 3; ++n) {
      CHECK(res.spectrum.entries()[n].energy ==
            doctest::Approx(catalog::levels::coulomb_effective(1.0, 1, n)).epsilon(1e-4));
    }
  }

  TEST_CASE("comparison of identical spectra") {
    const auto s = make_spectrum({-3.0, -1.0, 2.0});
    const auto report = oracle::compare_spectra(s, s, 1e-12, 0.0);
    CHECK(report.all_pass);
    CHECK(report.worst_deviation == 0.0);
    CHECK(report.only_in_first.empty());
    CHECK(report.only_in_second.empty());
  }

  TEST_CASE("a zero level needs an absolute tolerance") {
    const auto exact = make_spectrum({0.0, 24.0}, Provenance::algebraic);
    const auto numeric = make_spectrum({3e-6, 24.0001});
    CHECK_FALSE(oracle::compare_spectra(exact, numeric, 1e-5, 0.0).all_pass);
    const auto report = oracle::compare_spectra(exact, numeric, 1e-5, 1e-4);
    CHECK(report.all_pass);
    CHECK(report.levels[0].allowed == doctest::Approx(1e-4));
    CHECK(report.worst_deviation == doctest::Approx(1e-4).epsilon(1e-6));
  }

  TEST_CASE("levels present on one side only are listed") {
    const auto a = make_spectrum({1.0, 3.0, 5.0, 7.0});
    const auto b = make_spectrum({1.0, 3.0});
    const auto report = oracle::compare_spectra(a, b, 1e-9, 0.0);
    CHECK(report.levels.size() == 2);
    CHECK(report.only_in_first == std::vector<int>{2, 3});
    CHECK(report.only_in_second.empty());
    CHECK(oracle::compare_spectra(b, a, 1e-9, 0.0).only_in_second == std::vector<int>{2, 3});
    CHECK_THROWS_AS(oracle::compare_spectra(make_spectrum({}), a, 1e-9, 0.0), ArgumentError);
  }

  TEST_CASE("eigenvectors are orthonormal with n nodes") {
    const auto v = catalog::make_harmonic();
    const auto res = oracle::solve_bound_states(v, Grid::interior(-8.0, 8.0, 1000, v.domain()), 5);
    for (int i = 0; i < 5; ++i) {
      CHECK(node_count(res.wavefunctions[i]) == i);
      for (int j = 0; j < 5; ++j) {
        CHECK(std::abs(inner_product(res.wavefunctions[i], res.wavefunctions[j]) - (i == j ? 1.0 : 0.0)) < 1e-8);
      }
    }
  }

  TEST_CASE("matrix entries") {
    const auto v = catalog::make_harmonic();
    const Grid grid = Grid::uniform(-1.0, 1.0, 201, v.domain());
    const auto t = oracle::assemble_hamiltonian(v, grid);
    REQUIRE(t.size() == 201);
    REQUIRE(t.off_diagonal.size() == 200);
    const double h = 0.01;
    CHECK(t.off_diagonal[7] == doctest::Approx(-1.0 / (h * h)));
    CHECK(t.diagonal[0] == doctest::Approx(2.0 / (h * h) + 1.0));
    CHECK(t.diagonal[100] == doctest::Approx(2.0 / (h * h)));
  }

  TEST_CASE("invalid requests") {
    const auto v = catalog::make_harmonic();
    CHECK_THROWS_AS(oracle::solve_bound_states(v, Grid::interior(-5.0, 5.0, 100, v.domain()), 1), ArgumentError);
    const Grid grid = Grid::interior(-5.0, 5.0, 300, v.domain());
    CHECK_THROWS_AS(oracle::solve_bound_states(v, grid, 0), ArgumentError);
    CHECK_THROWS_AS(oracle::solve_bound_states(v, grid, 301), ArgumentError);
    std::vector<double> pts;
    for (int i = 0; i < 300; ++i) pts.push_back(-5.0 + 0.001 * i * i / 9.0);
    CHECK_THROWS_AS(oracle::solve_bound_states(v, Grid::from_points(pts, v.domain()), 1), ArgumentError);
  }

  TEST_CASE("Sturm counts and bisection match a dense solver") {
    oracle::SymmetricTridiagonal t;
    const int n = 60;
    for (int i = 0; i < n; ++i) t.diagonal.push_back(std::sin(1.3 * i) * 4.0 + 0.1 * i);
    for (int i = 0; i + 1 < n; ++i) t.off_diagonal.push_back(1.0 + 0.5 * std::cos(0.7 * i));
    Eigen::MatrixXd dense = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) dense(i, i) = t.diagonal[i];
    for (int i = 0; i + 1 < n; ++i) dense(i, i + 1) = dense(i + 1, i) = t.off_diagonal[i];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(dense);
    const Eigen::VectorXd ev = solver.eigenvalues();
    for (int k = 0; k < n; ++k) {
      CHECK(oracle::eigenvalue_by_bisection(t, k) == doctest::Approx(ev(k)).epsilon(1e-12).scale(1.0));
      CHECK(oracle::eigenvalues_below(t, ev(k) + 1e-9) == static_cast<std::size_t>(k + 1));
    }
    CHECK(oracle::eigenvalues_below(t, ev(0) - 1.0) == 0);
    CHECK_THROWS_AS(oracle::eigenvalue_by_bisection(t, n), ArgumentError);

    const auto vec = oracle::inverse_iteration(t, oracle::eigenvalue_by_bisection(t, 10));
    Eigen::VectorXd x = Eigen::Map<const Eigen::VectorXd>(vec.data(), n);
    CHECK((dense * x - ev(10) * x).norm() < 1e-8 * x.norm());
  }

  TEST_CASE("Hulthen levels above the asymptote are flagged unbound") {
    const auto v = catalog::make_hulthen(12.0);
    const auto res = oracle::solve_bound_states(v, defaults::oracle_grid("hulthen", v.domain()), 4);
    CHECK(res.bound_threshold == doctest::Approx(0.0).epsilon(1e-6).scale(1.0));
    CHECK(res.bound[0]);
    CHECK(res.bound[1]);
    CHECK_FALSE(res.bound[3]);
    for (int n = 0; n < 2; ++n) {
      CHECK(res.spectrum.entries()[n].energy == doctest::Approx(catalog::levels::hulthen(12.0, n)).epsilon(1e-4));
    }
  }

  TEST_CASE("Coulomb-effective l = 0 on the half-line out to 120 with 8000 points") {
    const auto v = catalog::make_coulomb_effective(1.0, 0);
    const auto res = oracle::solve_bound_states(v, Grid::interior(0.0, 120.0, 8000, v.domain()), 2);
    CHECK(std::abs(res.spectrum.entries()[0].energy) < 1e-4);
    CHECK(std::abs(res.spectrum.entries()[1].energy - 0.1875) < 1e-4);
  }

  TEST_CASE("l = 0 levels move at first order with the wall position") {
    // psi ~ x at the origin, so a wall displaced by one spacing shifts E1 by ~1e-3 here.
    const auto v = catalog::make_coulomb_effective(1.0, 0);
    const double at_origin = oracle::solve_bound_states(v, Grid::interior(0.0, 120.0, 8000, v.domain()), 2)
                                 .spectrum.entries()[1].energy;
    const double displaced = oracle::solve_bound_states(v, Grid::uniform(1e-3, 120.0, 8000, v.domain()), 2)
                                 .spectrum.entries()[1].energy;
    CHECK(std::abs(at_origin - 0.1875) < 1e-6);
    CHECK(std::abs(displaced - 0.1875) > 1e-4);
  }
}
