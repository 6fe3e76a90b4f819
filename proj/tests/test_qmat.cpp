// test_qmat.cpp

#include <doctest.h>

#include <cmath>

#include "test_support.hpp"
#include "wpurify/genuine_basis.hpp"
#include "wpurify/purify.hpp"
#include "wpurify/qmat.hpp"
#include "wpurify/wstates.hpp"

using namespace wpurify;
using test_support::max_abs_diff;

TEST_CASE("bit convention: qubit 0 is the most significant bit") {
  CHECK(bit_of(0b100, 0, 3) == 1);
  CHECK(bit_of(0b100, 1, 3) == 0);
  CHECK(bit_of(0b001, 2, 3) == 1);
}

TEST_CASE("tensor product of identities is the identity") {
  const Operator i2 = Operator::identity(1);
  const Operator i4 = tensor_product(i2, i2);
  CHECK(max_abs_diff(i4.entries(), Matrix::Identity(4, 4)) == 0.0);
  CHECK(i4.unitary());
}

TEST_CASE("tensor product basis ordering: |0> x |1> = |01>") {
  const StateVector zero = StateVector::computational(1, 0);
  const StateVector one = StateVector::computational(1, 1);
  const StateVector product = tensor_product(zero, one);
  CHECK(product.num_qubits() == 2);
  CHECK(product.amplitude(1) == Complex{1.0, 0.0});
  CHECK(std::abs(product.amplitude(0)) == 0.0);
  CHECK(std::abs(product.amplitude(2)) == 0.0);
  CHECK(std::abs(product.amplitude(3)) == 0.0);
}

TEST_CASE("tensor product of two concise states has trace 1 and dimension 64") {
  const DensityMatrix rho = concise_state(0.3);
  const DensityMatrix joint = tensor_product(rho, rho);
  CHECK(joint.num_qubits() == 6);
  CHECK(joint.dim() == 64);
  CHECK(std::abs(joint.entries().trace().real() - 1.0) < 1e-12);
}

TEST_CASE("tensor product beyond 12 qubits is rejected with a size error") {
  const DensityMatrix a = DensityMatrix::maximally_mixed(7);
  const DensityMatrix b = DensityMatrix::maximally_mixed(6);
  CHECK_THROWS_WITH_AS(tensor_product(a, b),
                       doctest::Contains("12-qubit limit"), std::invalid_argument);
}

TEST_CASE("apply X flips |0><0| to |1><1|") {
  const DensityMatrix rho = StateVector::computational(1, 0).projector();
  const DensityMatrix flipped = apply_operator(rho, Operator::pauli_x(1, 0));
  CHECK(max_abs_diff(flipped.entries(),
                     StateVector::computational(1, 1).projector().entries()) <
        1e-15);
}

TEST_CASE("CNOT truth table on |10>") {
  const DensityMatrix rho = StateVector::computational(2, 0b10).projector();
  const DensityMatrix out = apply_operator(rho, Operator::cnot(2, 0, 1));
  CHECK(max_abs_diff(out.entries(),
                     StateVector::computational(2, 0b11).projector().entries()) <
        1e-15);
}

TEST_CASE("the transversal-CNOT unitary leaves the maximally mixed state alone") {
  const DensityMatrix mixed = DensityMatrix::maximally_mixed(6);
  const DensityMatrix out = apply_operator(mixed, txor_operator(3));
  CHECK(max_abs_diff(out.entries(), mixed.entries()) < 1e-14);
}

TEST_CASE("apply_operator rejects mismatched dimensions and non-unitary flags") {
  const DensityMatrix rho = DensityMatrix::maximally_mixed(2);
  CHECK_THROWS_AS(apply_operator(rho, Operator::identity(3)), std::invalid_argument);
  const Operator hermitian_only(2, Matrix::Identity(4, 4) * 2.0, false);
  CHECK_THROWS_AS(apply_operator(rho, hermitian_only), std::invalid_argument);
  Matrix not_unitary = Matrix::Identity(4, 4) * 2.0;
  CHECK_THROWS_AS(Operator(2, not_unitary, true), std::invalid_argument);
}

TEST_CASE("partial trace of a Bell state is maximally mixed") {
  Vector bell(4);
  bell << 1.0 / std::sqrt(2.0), 0.0, 0.0, 1.0 / std::sqrt(2.0);
  const DensityMatrix rho = StateVector(2, bell).projector();
  for (int keep : {0, 1}) {
    const DensityMatrix marginal = partial_trace(rho, {keep});
    CHECK(max_abs_diff(marginal.entries(), Matrix::Identity(2, 2) * 0.5) < 1e-15);
  }
}

TEST_CASE("partial trace peels a product factor off exactly") {
  const DensityMatrix rho = concise_state(0.6);
  const DensityMatrix joint =
      tensor_product(StateVector::computational(1, 0).projector(), rho);
  const DensityMatrix back = partial_trace(joint, {1, 2, 3});
  CHECK(max_abs_diff(back.entries(), rho.entries()) < 1e-13);
}

TEST_CASE("one-qubit marginal of the W state is diag(2/3, 1/3)") {
  const GenuineBasis basis = genuine_basis_3();
  const DensityMatrix rho = basis.state(1).projector();
  const DensityMatrix marginal = partial_trace(rho, {0});
  Matrix expected(2, 2);
  expected << 2.0 / 3.0, 0.0, 0.0, 1.0 / 3.0;
  CHECK(max_abs_diff(marginal.entries(), expected) < 1e-14);
}

TEST_CASE("partial trace rejects empty or out-of-range keep sets") {
  const DensityMatrix rho = DensityMatrix::maximally_mixed(2);
  CHECK_THROWS_AS(partial_trace(rho, {}), std::invalid_argument);
  CHECK_THROWS_AS(partial_trace(rho, {2}), std::invalid_argument);
  CHECK_THROWS_AS(partial_trace(rho, {0, 0}), std::invalid_argument);
}

TEST_CASE("measuring a lone qubit leaves the scalar state") {
  const DensityMatrix rho = StateVector::computational(1, 0).projector();
  const MeasurementResult hit = measure_computational(rho, {0}, "0");
  CHECK(hit.probability == doctest::Approx(1.0).epsilon(1e-14));
  REQUIRE(hit.post_state.has_value());
  CHECK(hit.post_state->num_qubits() == 0);
  CHECK(hit.post_state->entries()(0, 0) == Complex{1.0, 0.0});

  const MeasurementResult miss = measure_computational(rho, {0}, "1");
  CHECK(miss.probability == 0.0);
  CHECK(!miss.post_state.has_value());  // impossible branch is flagged undefined
}

TEST_CASE("maximally mixed three-qubit outcomes are uniform") {
  const DensityMatrix rho = DensityMatrix::maximally_mixed(3);
  for (std::size_t v = 0; v < 8; ++v) {
    std::string outcome = {char('0' + ((v >> 2) & 1)), char('0' + ((v >> 1) & 1)),
                           char('0' + (v & 1))};
    const MeasurementResult m = measure_computational(rho, {0, 1, 2}, outcome);
    CHECK(m.probability == doctest::Approx(0.125).epsilon(1e-13));
  }
}

TEST_CASE("measuring the targets of two CNOT-coupled W copies at 000 hits 1/3") {
  const GenuineBasis basis = genuine_basis_3();
  const DensityMatrix copy = basis.state(1).projector();
  const DensityMatrix joint = tensor_product(copy, copy);
  const DensityMatrix evolved = apply_operator(joint, txor_operator(3));
  const MeasurementResult m = measure_computational(evolved, {3, 4, 5}, "000");
  CHECK(std::abs(m.probability - 1.0 / 3.0) < 1e-13);
  REQUIRE(m.post_state.has_value());
  CHECK(m.post_state->num_qubits() == 3);
}

TEST_CASE("measurement input validation") {
  const DensityMatrix rho = DensityMatrix::maximally_mixed(2);
  CHECK_THROWS_AS(measure_computational(rho, {0, 1}, "0"), std::invalid_argument);
  CHECK_THROWS_AS(measure_computational(rho, {0, 0}, "00"), std::invalid_argument);
  CHECK_THROWS_AS(measure_computational(rho, {0, 2}, "00"), std::invalid_argument);
  CHECK_THROWS_AS(measure_computational(rho, {0, 1}, "0x"), std::invalid_argument);
}

TEST_CASE("diagnostics on textbook states") {
  Vector bell(4);
  bell << 1.0 / std::sqrt(2.0), 0.0, 0.0, 1.0 / std::sqrt(2.0);
  const Diagnostics bell_diag = diagnostics(StateVector(2, bell).projector());
  CHECK(bell_diag.purity == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(bell_diag.marginal_entropies[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(bell_diag.marginal_entropies[1] == doctest::Approx(1.0).epsilon(1e-12));
  REQUIRE(bell_diag.negativity_2q.has_value());
  CHECK(*bell_diag.negativity_2q == doctest::Approx(0.5).epsilon(1e-12));

  const Diagnostics product_diag =
      diagnostics(StateVector::computational(2, 0b01).projector());
  CHECK(product_diag.purity == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(product_diag.marginal_entropies[0] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(product_diag.marginal_entropies[1] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(*product_diag.negativity_2q == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("two-qubit reduction of the W state has purity 5/9") {
  const GenuineBasis basis = genuine_basis_3();
  const DensityMatrix pair = partial_trace(basis.state(1).projector(), {1, 2});
  CHECK(pair.purity() == doctest::Approx(5.0 / 9.0).epsilon(1e-13));
  // No negativity field on three-qubit inputs.
  CHECK(!diagnostics(basis.state(1).projector()).negativity_2q.has_value());
}

TEST_CASE("unitary conjugation preserves trace and spectrum") {
  std::mt19937_64 rng(2024);
  for (int rep = 0; rep < 20; ++rep) {
    const DensityMatrix rho = test_support::random_density(3, rng);
    const Operator u(3, test_support::random_unitary(8, rng), true);
    const DensityMatrix out = apply_operator(rho, u);
    CHECK(std::abs(out.entries().trace().real() - 1.0) < 1e-12);
    Eigen::SelfAdjointEigenSolver<Matrix> before(rho.entries(), Eigen::EigenvaluesOnly);
    Eigen::SelfAdjointEigenSolver<Matrix> after(out.entries(), Eigen::EigenvaluesOnly);
    CHECK((before.eigenvalues() - after.eigenvalues()).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("measurement outcomes on random states are a probability distribution") {
  std::mt19937_64 rng(77);
  for (int rep = 0; rep < 10; ++rep) {
    const DensityMatrix rho = test_support::random_density(3, rng);
    double total = 0.0;
    for (std::size_t v = 0; v < 4; ++v) {
      std::string outcome = {char('0' + ((v >> 1) & 1)), char('0' + (v & 1))};
      total += measure_computational(rho, {0, 2}, outcome).probability;
    }
    CHECK(std::abs(total - 1.0) < 1e-12);
  }
}

TEST_CASE("partial trace undoes a tensor product") {
  std::mt19937_64 rng(31);
  for (int rep = 0; rep < 10; ++rep) {
    const DensityMatrix a = test_support::random_density(2, rng);
    const DensityMatrix b = test_support::random_density(1, rng);
    const DensityMatrix joint = tensor_product(a, b);
    CHECK(max_abs_diff(partial_trace(joint, {0, 1}).entries(), a.entries()) < 1e-12);
    CHECK(max_abs_diff(partial_trace(joint, {2}).entries(), b.entries()) < 1e-12);
  }
}

TEST_CASE("diagnostics stay inside their ranges on random states") {
  std::mt19937_64 rng(55);
  for (int rep = 0; rep < 10; ++rep) {
    const DensityMatrix rho = test_support::random_density(3, rng);
    const Diagnostics d = diagnostics(rho);
    CHECK(d.purity >= 1.0 / 8.0 - 1e-12);
    CHECK(d.purity <= 1.0 + 1e-12);
    for (double h : d.marginal_entropies) {
      CHECK(h >= -1e-12);
      CHECK(h <= 1.0 + 1e-12);
    }
  }
}

TEST_CASE("density matrix construction rejects invalid input") {
  Matrix bad_trace = Matrix::Identity(2, 2);
  CHECK_THROWS_WITH_AS(DensityMatrix(1, bad_trace), doctest::Contains("trace"),
                       std::invalid_argument);

  Matrix not_hermitian(2, 2);
  not_hermitian << 0.5, 0.5, 0.0, 0.5;
  CHECK_THROWS_WITH_AS(DensityMatrix(1, not_hermitian),
                       doctest::Contains("Hermitian"), std::invalid_argument);

  Matrix not_psd(2, 2);
  not_psd << 1.5, 0.0, 0.0, -0.5;
  CHECK_THROWS_WITH_AS(DensityMatrix(1, not_psd),
                       doctest::Contains("positive semidefinite"),
                       std::invalid_argument);

  Vector unnormalized(2);
  unnormalized << 1.0, 1.0;
  CHECK_THROWS_AS(StateVector(1, unnormalized), std::invalid_argument);
}

TEST_CASE("expectation matches the projector overlap") {
  const GenuineBasis basis = genuine_basis_3();
  const DensityMatrix rho = concise_state(0.7);
  CHECK(expectation(rho, basis.state(1)) == doctest::Approx(0.7).epsilon(1e-13));
  CHECK(expectation(rho, basis.state(5)) ==
        doctest::Approx(0.3 / 7.0).epsilon(1e-12));
}

TEST_CASE("qubit layout is a permutation of 0..2k-1 with labeled parties") {
  const QubitLayout layout(3);
  std::vector<bool> seen(6, false);
  for (int p = 0; p < 3; ++p) {
    seen[static_cast<std::size_t>(layout.source_qubit(p))] = true;
    seen[static_cast<std::size_t>(layout.target_qubit(p))] = true;
  }
  for (bool s : seen) CHECK(s);
  CHECK(QubitLayout::party_label(0) == 'A');
  CHECK(QubitLayout::party_label(2) == 'C');
  CHECK_THROWS_AS(QubitLayout(5), std::invalid_argument);
  CHECK_THROWS_AS(layout.source_qubit(3), std::invalid_argument);
}
