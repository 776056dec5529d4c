#include <doctest.h>

#include <cmath>

#include <Eigen/Eigenvalues>

#include "helpers.hpp"
#include "sipot/catalog.hpp"
#include "sipot/errors.hpp"
#include "sipot/ladder.hpp"
#include "sipot/spectrum.hpp"

using namespace sipot;
using ladder::AlgebraClass;
using ladder::RemainderConvention;

TEST_SUITE("ladder") {
  TEST_CASE("B+ B- carries the partial sums on its diagonal") {
    const auto morse = ladder::build_rep(catalog::make_morse(12.5), 8);
    const Eigen::MatrixXd n_morse = morse.b_plus() * morse.b_minus();
    CHECK(n_morse(0, 0) == 0.0);
    CHECK(n_morse(1, 1) == doctest::Approx(23.0).epsilon(1e-14));
    CHECK(n_morse(2, 2) == doctest::Approx(44.0).epsilon(1e-14));

    const auto pt1 = ladder::build_rep(catalog::make_pt1(2.0, 3.0), 8);
    const Eigen::MatrixXd n_pt1 = pt1.b_plus() * pt1.b_minus();
    CHECK(n_pt1(0, 0) == 0.0);
    CHECK(n_pt1(3, 3) == doctest::Approx(96.0).epsilon(1e-14));
    CHECK(pt1.b_plus()(1, 0) == doctest::Approx(std::sqrt(24.0)).epsilon(1e-14));
  }

  TEST_CASE("B- is the transpose of B+ and only the subdiagonal is filled") {
    const auto rep = ladder::build_rep(catalog::make_pt1(1.5, 2.5), 12);
    CHECK((rep.b_minus() - rep.b_plus().transpose()).cwiseAbs().maxCoeff() == 0.0);
    for (int i = 0; i < rep.n_dim(); ++i) {
      for (int j = 0; j < rep.n_dim(); ++j) {
        if (i != j + 1) CHECK(rep.b_plus()(i, j) == 0.0);
      }
    }
  }

  TEST_CASE("truncation beyond the bound levels is refused") {
    try {
      ladder::build_rep(catalog::make_morse(5.0), 8);
      FAIL("expected TruncationTooLargeError");
    } catch (const TruncationTooLargeError& e) {
      CHECK(e.first_offending_level() == 5);
    }
    CHECK_NOTHROW(ladder::build_rep(catalog::make_morse(5.0), 5));
    CHECK_THROWS_AS(ladder::build_rep(catalog::make_pt1(2.0, 3.0), 3), ArgumentError);
  }

  TEST_CASE("Hamiltonian eigenvalues equal the algebraic levels") {
    for (const auto& model : {catalog::make_morse(12.5), catalog::make_pt1(2.0, 3.0)}) {
      const int n = 10;
      const auto rep = ladder::build_rep(model, n);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(rep.hamiltonian());
      const auto exact = algebraic_levels(model, n - 1).energies();
      for (int k = 0; k < n; ++k) {
        CHECK(solver.eigenvalues()(k) == doctest::Approx(exact[k]).epsilon(1e-12));
        CHECK(rep.energies()(k) == doctest::Approx(exact[k]).epsilon(1e-14));
      }
    }
  }

  TEST_CASE("commutator identities hold in the interior") {
    for (const auto& model : {catalog::make_morse(12.5), catalog::make_pt1(2.0, 3.0), catalog::make_pt1(7.25, 1.5)}) {
      const auto res = ladder::commutator_residuals(ladder::build_rep(model, 12));
      CHECK(res.lowering_raising < 1e-10);
      CHECK(res.hamiltonian_raising < 1e-10);
      CHECK(res.hamiltonian_lowering < 1e-10);
      CHECK(res.hamiltonian_powers_relative < 1e-12);
      CHECK(res.remainder_shift < 1e-10);
      CHECK(res.double_commutator_pattern < 1e-10);
      CHECK(res.double_commutator < 1e-10);
      CHECK(res.edge > 1.0);
    }
  }

  TEST_CASE("PT1 closes with opposite-sign bracket and printed scales") {
    const auto report = ladder::classify_algebra(catalog::make_pt1(2.0, 3.0), 40);
    CHECK(report.n_dim == 40);
    CHECK(report.spacing_d == doctest::Approx(8.0).epsilon(1e-14));
    CHECK(report.classification == AlgebraClass::su11);
    CHECK(report.bracket_sign == -1);
    CHECK(report.k0_scale == doctest::Approx(0.125).epsilon(1e-14));
    CHECK(report.kpm_scale == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(report.max_interior_residual < 1e-10);
    REQUIRE(report.has_printed);
    CHECK(report.printed_scales_match);
    CHECK_FALSE(report.printed_label_matches);
  }

  TEST_CASE("Morse closes with same-sign bracket and printed scales disagree") {
    const auto report = ladder::classify_algebra(catalog::make_morse(12.5), 40);
    CHECK(report.n_dim == 12);
    CHECK(report.spacing_d == doctest::Approx(-2.0).epsilon(1e-14));
    CHECK(report.classification == AlgebraClass::su2);
    CHECK(report.bracket_sign == 1);
    CHECK(report.k0_scale == doctest::Approx(-0.5).epsilon(1e-14));
    CHECK(report.kpm_scale == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(report.max_interior_residual < 1e-10);
    REQUIRE(report.has_printed);
    CHECK_FALSE(report.printed_scales_match);
    CHECK(report.printed_closure_residual > 1e-3);
    CHECK_FALSE(report.note.empty());
  }

  TEST_CASE("quadratic remainder has no closed three-generator algebra") {
    const auto model = test::synthetic_model([](double a) { return a * a; }, 1.0);
    const auto report = ladder::classify_algebra(model, 10);
    CHECK(report.classification == AlgebraClass::non_constant_spacing);
    const auto res = ladder::commutator_residuals(ladder::build_rep(model, 10));
    CHECK(res.double_commutator > 1.0);
    CHECK(res.double_commutator_pattern < 1e-10);
    CHECK(res.lowering_raising < 1e-10);
  }

  TEST_CASE("constant remainder gives a central bracket") {
    const auto report = ladder::classify_algebra(test::synthetic_model([](double) { return 3.0; }), 10);
    CHECK(report.classification == AlgebraClass::heisenberg);
    CHECK(report.spacing_d == 0.0);
    CHECK(report.max_interior_residual < 1e-12);
  }

  TEST_CASE("rescaling the remainder keeps the classification and closure") {
    for (double c : {1.0, 0.01, 250.0}) {
      const auto model = test::synthetic_model([c](double a) { return c * (8.0 * a + 5.0); }, 1.0);
      const auto report = ladder::classify_algebra(model, 20);
      CHECK(report.classification == AlgebraClass::su11);
      CHECK(report.spacing_d == doctest::Approx(8.0 * c).epsilon(1e-12));
      CHECK(report.kpm_scale == doctest::Approx(std::sqrt(2.0 / (8.0 * c))).epsilon(1e-12));
      CHECK(report.max_interior_residual < 1e-9 * std::max(1.0, c));
    }
  }

  TEST_CASE("before-shift convention lags rho by one level") {
    const auto model = catalog::make_pt1(2.0, 3.0);
    const auto after = ladder::build_rep(model, 10, RemainderConvention::after_shift);
    const auto before = ladder::build_rep(model, 10, RemainderConvention::before_shift);
    CHECK(before.convention() == RemainderConvention::before_shift);
    for (int n = 0; n + 1 < 10; ++n) CHECK(before.rho_diagonal()(n + 1) == after.rho_diagonal()(n));
    CHECK(ladder::commutator_residuals(after).lowering_raising < 1e-10);
    CHECK(ladder::commutator_residuals(before).lowering_raising == doctest::Approx(8.0).epsilon(1e-10));
    CHECK((after.b_plus() - before.b_plus()).cwiseAbs().maxCoeff() == 0.0);
  }
}
