// genuine_basis.hpp
// The orthonormal bases of genuinely entangled states used by the
// purification protocol: 8 states for three qubits (six W-type phase states
// plus two GHZ states) and 16 states for four qubits. Also the total-spin
// operators and the eigenvalue check that singles out the four basic states.
#pragma once

#include <string>
#include <vector>

#include "wpurify/qmat.hpp"

namespace wpurify {

struct GenuineBasis {
  int qubit_count = 0;
  std::vector<StateVector> states;  // index order, 8 or 16 entries
  std::vector<std::string> labels;  // "GB1".."GB8" or "GB4_1".."GB4_16"

  // 1-based accessor matching the labels.
  const StateVector& state(int index) const;
};

// Three qubits: GB1..GB3 = (|001> + w^n|010> + w^2n|100>)/sqrt(3) with
// w = exp(-i 2pi/3), n = 0,1,2; GB4..GB6 the same over the flipped triple
// (|110>, |101>, |011>); GB7/GB8 = (|000> +- |111>)/sqrt(2).
GenuineBasis genuine_basis_3();

// Four qubits, 16 states: sign patterns over the single-excitation and
// triple-excitation quadruples, six phased states over the double-excitation
// sextet with w = exp(i pi/6), and the two GHZ states.
GenuineBasis genuine_basis_4();

struct BasisReport {
  double max_offdiag_overlap = 0.0;  // max |<i|j>| over i != j
  double max_norm_error = 0.0;       // max | ||psi|| - 1 |
  double completeness_defect = 0.0;  // max-abs entry of sum of projectors - I

  bool passes(double tol) const {
    return max_offdiag_overlap < tol && max_norm_error < tol &&
           completeness_defect < tol;
  }
};

BasisReport verify_basis(const GenuineBasis& basis, double tol);

// Total spin components over an index set (sigma/2 per qubit, hbar = 1)
// and their squared sum. j2 is Hermitian and commutes with each component.
struct SpinOperatorSet {
  Operator jx;
  Operator jy;
  Operator jz;
  Operator j2;
};

SpinOperatorSet spin_operator_set(const std::vector<int>& indices, int num_qubits);

// (sum_i S_i) . (sum_i S_i) over the given qubits, identity elsewhere.
Operator total_spin_squared(const std::vector<int>& indices, int num_qubits);

struct SpinEigencheckEntry {
  std::string label;
  double j2_total;       // Rayleigh quotient of the three-qubit spin-squared
  double j2_first_pair;  // Rayleigh quotient of the qubit {0,1} spin-squared
  double residual;       // max norm residual against eigenvalues 15/4 and 2
};

// Checks the four basic states (symmetric W, flipped W, |000>, |111>)
// against the simultaneous eigenvalues 15/4 and 2.
std::vector<SpinEigencheckEntry> eigencheck_basic_states();

}  // namespace wpurify
