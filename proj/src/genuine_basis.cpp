// genuine_basis.cpp

#include "wpurify/genuine_basis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace wpurify {

namespace {

Vector zero_vec(int num_qubits) {
  return Vector::Zero(static_cast<Eigen::Index>(dim_for(num_qubits)));
}

// Equal-magnitude superposition of the given basis indices with the given
// phases, normalized.
StateVector phased_state(int num_qubits, const std::vector<std::size_t>& indices,
                         const std::vector<Complex>& phases) {
  Vector amps = zero_vec(num_qubits);
  const double norm = 1.0 / std::sqrt(static_cast<double>(indices.size()));
  for (std::size_t k = 0; k < indices.size(); ++k)
    amps(static_cast<Eigen::Index>(indices[k])) = phases[k] * norm;
  return StateVector(num_qubits, std::move(amps));
}

}  // namespace

const StateVector& GenuineBasis::state(int index) const {
  if (index < 1 || index > static_cast<int>(states.size()))
    throw std::invalid_argument("basis state index out of range");
  return states[static_cast<std::size_t>(index - 1)];
}

GenuineBasis genuine_basis_3() {
  const Complex w = std::exp(Complex{0.0, -2.0 * std::numbers::pi / 3.0});
  GenuineBasis basis;
  basis.qubit_count = 3;
  // |001> = 1, |010> = 2, |100> = 4 ; |110> = 6, |101> = 5, |011> = 3.
  for (int n = 0; n < 3; ++n) {
    basis.states.push_back(phased_state(
        3, {1, 2, 4}, {1.0, std::pow(w, n), std::pow(w, 2 * n)}));
    basis.labels.push_back("GB" + std::to_string(n + 1));
  }
  for (int n = 0; n < 3; ++n) {
    basis.states.push_back(phased_state(
        3, {6, 5, 3}, {1.0, std::pow(w, n), std::pow(w, 2 * n)}));
    basis.labels.push_back("GB" + std::to_string(n + 4));
  }
  basis.states.push_back(phased_state(3, {0, 7}, {1.0, 1.0}));
  basis.labels.push_back("GB7");
  basis.states.push_back(phased_state(3, {0, 7}, {1.0, -1.0}));
  basis.labels.push_back("GB8");
  return basis;
}

GenuineBasis genuine_basis_4() {
  const Complex w = std::exp(Complex{0.0, std::numbers::pi / 6.0});
  auto wp = [&](int k) { return std::pow(w, k); };

  GenuineBasis basis;
  basis.qubit_count = 4;

  // Single-excitation quadruple |0001>,|0010>,|0100>,|1000> = 1,2,4,8 and
  // triple-excitation quadruple |1110>,|1101>,|1011>,|0111> = 14,13,11,7,
  // each with the four orthogonal sign patterns.
  const std::vector<std::vector<Complex>> signs = {
      {1, 1, 1, 1}, {1, 1, -1, -1}, {1, -1, 1, -1}, {1, -1, -1, 1}};
  for (const auto& s : signs) basis.states.push_back(phased_state(4, {1, 2, 4, 8}, s));
  for (const auto& s : signs) basis.states.push_back(phased_state(4, {14, 13, 11, 7}, s));

  // Double-excitation sextet |1100>,|1010>,|1001>,|0110>,|0101>,|0011>
  // = 12,10,9,6,5,3 with twelfth-root-of-unity phase rows.
  const std::vector<std::size_t> sextet = {12, 10, 9, 6, 5, 3};
  basis.states.push_back(phased_state(4, sextet, {1, 1, 1, 1, 1, 1}));
  basis.states.push_back(
      phased_state(4, sextet, {1, wp(10), wp(8), -1, wp(4), wp(2)}));
  basis.states.push_back(
      phased_state(4, sextet, {1, wp(8), wp(4), 1, wp(8), wp(4)}));
  basis.states.push_back(phased_state(4, sextet, {1, -1, 1, -1, 1, -1}));
  basis.states.push_back(
      phased_state(4, sextet, {1, wp(4), wp(8), 1, wp(4), wp(8)}));
  basis.states.push_back(
      phased_state(4, sextet, {1, wp(2), wp(4), -1, wp(8), wp(10)}));

  // GHZ pair.
  basis.states.push_back(phased_state(4, {0, 15}, {1.0, 1.0}));
  basis.states.push_back(phased_state(4, {0, 15}, {1.0, -1.0}));

  for (int i = 1; i <= 16; ++i) basis.labels.push_back("GB4_" + std::to_string(i));
  return basis;
}

BasisReport verify_basis(const GenuineBasis& basis, double tol) {
  if (tol <= 0.0) throw std::invalid_argument("verification tolerance must be positive");
  BasisReport report;
  const auto dim = static_cast<Eigen::Index>(dim_for(basis.qubit_count));
  Matrix completeness = Matrix::Zero(dim, dim);
  for (std::size_t i = 0; i < basis.states.size(); ++i) {
    const Vector& vi = basis.states[i].amplitudes();
    report.max_norm_error =
        std::max(report.max_norm_error, std::abs(vi.norm() - 1.0));
    completeness += vi * vi.adjoint();
    for (std::size_t j = i + 1; j < basis.states.size(); ++j) {
      const double overlap = std::abs(basis.states[i].inner(basis.states[j]));
      report.max_offdiag_overlap = std::max(report.max_offdiag_overlap, overlap);
    }
  }
  report.completeness_defect =
      (completeness - Matrix::Identity(dim, dim)).cwiseAbs().maxCoeff();
  return report;
}

SpinOperatorSet spin_operator_set(const std::vector<int>& indices, int num_qubits) {
  if (indices.empty()) throw std::invalid_argument("spin operator needs a nonempty index set");
  const auto dim = static_cast<Eigen::Index>(dim_for(num_qubits));

  Eigen::Matrix2cd sx, sy, sz;
  sx << 0, 0.5, 0.5, 0;
  sy << 0, Complex{0, -0.5}, Complex{0, 0.5}, 0;
  sz << 0.5, 0, 0, -0.5;

  std::vector<Matrix> sums;
  for (const auto& component : {sx, sy, sz}) {
    Matrix sum = Matrix::Zero(dim, dim);
    for (int q : indices)
      sum += Operator::single_qubit(num_qubits, q, component, false).entries();
    sums.push_back(std::move(sum));
  }
  Matrix squared = sums[0] * sums[0] + sums[1] * sums[1] + sums[2] * sums[2];
  return SpinOperatorSet{Operator(num_qubits, std::move(sums[0]), false),
                         Operator(num_qubits, std::move(sums[1]), false),
                         Operator(num_qubits, std::move(sums[2]), false),
                         Operator(num_qubits, std::move(squared), false)};
}

Operator total_spin_squared(const std::vector<int>& indices, int num_qubits) {
  return spin_operator_set(indices, num_qubits).j2;
}

std::vector<SpinEigencheckEntry> eigencheck_basic_states() {
  const Operator j2_total = total_spin_squared({0, 1, 2}, 3);
  const Operator j2_pair = total_spin_squared({0, 1}, 3);

  const double inv_sqrt3 = 1.0 / std::sqrt(3.0);
  std::vector<std::pair<std::string, Vector>> basics;
  {
    Vector w = Vector::Zero(8);
    w(1) = w(2) = w(4) = inv_sqrt3;
    basics.emplace_back("W", std::move(w));
  }
  {
    Vector wf = Vector::Zero(8);
    wf(6) = wf(5) = wf(3) = inv_sqrt3;
    basics.emplace_back("W-flipped", std::move(wf));
  }
  {
    Vector k0 = Vector::Zero(8);
    k0(0) = 1.0;
    basics.emplace_back("|000>", std::move(k0));
  }
  {
    Vector k7 = Vector::Zero(8);
    k7(7) = 1.0;
    basics.emplace_back("|111>", std::move(k7));
  }

  std::vector<SpinEigencheckEntry> report;
  for (const auto& [label, psi] : basics) {
    SpinEigencheckEntry entry;
    entry.label = label;
    const Vector jt = j2_total.entries() * psi;
    const Vector jp = j2_pair.entries() * psi;
    entry.j2_total = psi.dot(jt).real();
    entry.j2_first_pair = psi.dot(jp).real();
    entry.residual = std::max((jt - 3.75 * psi).norm(), (jp - 2.0 * psi).norm());
    report.push_back(std::move(entry));
  }
  return report;
}

}  // namespace wpurify
