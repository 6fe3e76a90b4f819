// test_wstates.cpp

#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "test_support.hpp"
#include "wpurify/genuine_basis.hpp"
#include "wpurify/wstates.hpp"

using namespace wpurify;
using test_support::max_abs_diff;

TEST_CASE("pure, uniform and two-component mixtures") {
  const GenuineBasis basis = genuine_basis_3();

  const DensityMatrix pure =
      mixed_from_coeffs(CoefficientVector({1, 0, 0, 0, 0, 0, 0, 0}));
  CHECK(max_abs_diff(pure.entries(), basis.state(1).projector().entries()) < 1e-15);

  const DensityMatrix uniform = mixed_from_coeffs(
      CoefficientVector({0.125, 0.125, 0.125, 0.125, 0.125, 0.125, 0.125, 0.125}));
  CHECK(max_abs_diff(uniform.entries(), Matrix::Identity(8, 8) / 8.0) < 1e-14);

  const DensityMatrix total_mixture =
      mixed_from_coeffs(CoefficientVector({0.5, 0, 0, 0.5, 0, 0, 0, 0}));
  const Matrix expected = 0.5 * basis.state(1).projector().entries() +
                          0.5 * basis.state(4).projector().entries();
  CHECK(max_abs_diff(total_mixture.entries(), expected) < 1e-15);
}

TEST_CASE("coefficient vector rejects non-simplex input") {
  CHECK_THROWS_WITH_AS(CoefficientVector({-0.1, 1.1, 0, 0, 0, 0, 0, 0}),
                       doctest::Contains("nonnegative"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(CoefficientVector({0.5, 0.4, 0, 0, 0, 0, 0, 0}),
                       doctest::Contains("sum to 1"), std::invalid_argument);
}

TEST_CASE("concise family endpoints and spectrum") {
  const GenuineBasis basis = genuine_basis_3();
  CHECK(max_abs_diff(concise_state(1.0).entries(),
                     basis.state(1).projector().entries()) < 1e-15);
  CHECK(max_abs_diff(concise_state(0.125).entries(), Matrix::Identity(8, 8) / 8.0) <
        1e-14);

  Eigen::SelfAdjointEigenSolver<Matrix> solver(concise_state(0.5).entries(),
                                               Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  CHECK(ev(7) == doctest::Approx(0.5).epsilon(1e-13));
  for (int i = 0; i < 7; ++i)
    CHECK(ev(i) == doctest::Approx(1.0 / 14.0).epsilon(1e-12));

  CHECK_THROWS_AS(concise_state(1.5), std::invalid_argument);
  CHECK_THROWS_AS(concise_state(-0.1), std::invalid_argument);
  CHECK_THROWS_AS(CoefficientVector::concise(2.0), std::invalid_argument);
}

TEST_CASE("twirl projects onto the concise family and is idempotent") {
  const DensityMatrix already = concise_state(0.7);
  CHECK(max_abs_diff(twirl_to_concise(already).entries(), already.entries()) <
        1e-13);

  const DensityMatrix mixed =
      mixed_from_coeffs(CoefficientVector({0.5, 0.3, 0.2, 0, 0, 0, 0, 0}));
  CHECK(max_abs_diff(twirl_to_concise(mixed).entries(),
                     concise_state(0.5).entries()) < 1e-13);

  const DensityMatrix fully_mixed = DensityMatrix::maximally_mixed(3);
  CHECK(max_abs_diff(twirl_to_concise(fully_mixed).entries(),
                     fully_mixed.entries()) < 1e-13);

  CHECK_THROWS_AS(twirl_to_concise(DensityMatrix::maximally_mixed(2)),
                  std::invalid_argument);
}

TEST_CASE("W fraction on diagonal states and the GHZ corner") {
  const WFraction concise = w_fraction(concise_state(0.7));
  CHECK(concise.value == doctest::Approx(0.7).epsilon(1e-13));
  CHECK(concise.argmax_index == 1);

  const GenuineBasis basis = genuine_basis_3();
  const WFraction ghz = w_fraction(basis.state(7).projector());
  CHECK(ghz.value == doctest::Approx(0.0).epsilon(1e-13));
  CHECK(ghz.argmax_index == 1);  // ties break toward the smallest index

  const WFraction uniform = w_fraction(DensityMatrix::maximally_mixed(3));
  CHECK(uniform.value == doctest::Approx(0.125).epsilon(1e-13));
  CHECK(uniform.argmax_index == 1);

  const WFraction second =
      w_fraction(mixed_from_coeffs(CoefficientVector({0.1, 0.6, 0.3, 0, 0, 0, 0, 0})));
  CHECK(second.value == doctest::Approx(0.6).epsilon(1e-13));
  CHECK(second.argmax_index == 2);
}

TEST_CASE("parser accepts whitespace and comma separators") {
  const CoefficientVector a = CoefficientVector::parse("0.3 0.1 0.1 0.1 0.1 0.1 0.1 0.1");
  CHECK(a[0] == doctest::Approx(0.3));
  const CoefficientVector b =
      CoefficientVector::parse("0.3, 0.1, 0.1, 0.1,\n0.1, 0.1, 0.1, 0.1");
  CHECK(b[5] == doctest::Approx(0.1));
}

TEST_CASE("parser names the violated invariant") {
  CHECK_THROWS_WITH_AS(CoefficientVector::parse("0.5 0.5"),
                       doctest::Contains("expected 8 coefficients"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(
      CoefficientVector::parse("0.9 0.2 0 0 0 0 0 -0.1"),
      doctest::Contains("nonnegative"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(
      CoefficientVector::parse("0.5 0.1 0.1 0.1 0.1 0.1 0.1 0.1"),
      doctest::Contains("sum to 1"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(
      CoefficientVector::parse("a 0.1 0.1 0.1 0.1 0.1 0.1 0.1"),
      doctest::Contains("invalid coefficient token"), std::invalid_argument);
}

TEST_CASE("W fraction of a diagonal mixture is the largest W coefficient") {
  std::mt19937_64 rng(4242);
  for (int rep = 0; rep < 200; ++rep) {
    const auto values = test_support::random_simplex(rng);
    const CoefficientVector c(values);
    const WFraction f = w_fraction(mixed_from_coeffs(c));
    const double expected = *std::max_element(values.begin(), values.begin() + 6);
    CHECK(std::abs(f.value - expected) < 1e-12);
  }
}

TEST_CASE("twirl preserves the GB1 population exactly") {
  std::mt19937_64 rng(515);
  const GenuineBasis basis = genuine_basis_3();
  for (int rep = 0; rep < 50; ++rep) {
    const DensityMatrix rho = test_support::random_density(3, rng);
    const double f = expectation(rho, basis.state(1));
    const DensityMatrix twirled = twirl_to_concise(rho);
    CHECK(std::abs(expectation(twirled, basis.state(1)) - f) < 1e-12);
    if (f >= 0.125)
      CHECK(std::abs(w_fraction(twirled).value - f) < 1e-12);
  }
}

TEST_CASE("every simplex point yields a valid density matrix") {
  std::mt19937_64 rng(616);
  for (int rep = 0; rep < 50; ++rep) {
    const CoefficientVector c(test_support::random_simplex(rng));
    const DensityMatrix rho = mixed_from_coeffs(c);  // constructor validates
    CHECK(rho.num_qubits() == 3);
  }
}
