// purify.hpp
// One recurrence round of the two-copy purification protocol: transversal
// CNOTs from each party's source qubit onto its target qubit, a
// computational-basis measurement of the target copy, and the post-selection
// bookkeeping for every outcome, including the Bell by-products of the
// failure branches.
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wpurify/qmat.hpp"
#include "wpurify/wstates.hpp"

namespace wpurify {

enum class BranchKind { Success, Reject, FailBipartite };

// All zeros purifies, all ones is rejected, anything else leaves at most
// bipartite entanglement behind.
BranchKind classify(std::string_view outcome);
std::string_view to_string(BranchKind kind);

// Product of one CNOT per party, source qubit as control, target qubit as
// target, on the 2k-qubit layout. Self-inverse.
Operator txor_operator(int num_parties = 3);

struct Branch {
  std::string outcome;
  double probability = 0.0;
  std::optional<DensityMatrix> post_source;  // empty for impossible branches
  BranchKind classification = BranchKind::FailBipartite;
};

struct RoundResult {
  CoefficientVector input;
  std::vector<Branch> branches;  // indexed by the outcome's binary value

  const Branch& branch(std::string_view outcome) const;
};

// One round on two copies of the genuine-basis mixture with coefficients c.
RoundResult purification_round(const CoefficientVector& c);

// Generic driver for any party count (2 to 4): two copies of `copy`, the
// transversal CNOTs, one branch per target outcome. No closed forms are
// attached; this is the brute-force engine.
std::vector<Branch> purification_round_copies(const DensityMatrix& copy);

struct ByproductReport {
  std::string outcome;
  double branch_probability = 0.0;
  // True when the two non-factorized qubits are left in a pure state.
  bool is_pure = false;
  // Set when the post state factorizes as (party) x (pair) within 1e-10.
  std::optional<int> factorized_party;
  double pair_purity = 0.0;
  // Base-2 entropy of one half of the pair; this is the entanglement
  // entropy in ebits exactly when the pair is pure.
  double pair_entropy = 0.0;
  double pair_negativity = 0.0;
  // The pair's two-qubit state, kept for inspection. Qubits appear in
  // ascending party order.
  DensityMatrix pair_state;
};

// Examines a failure branch for the Bell-pair by-product. Requires a
// FailBipartite outcome with probability above the impossibility floor.
ByproductReport byproduct_analysis(const RoundResult& round, std::string_view outcome);

// Plain-text table: outcome, probability, classification, W fraction, purity.
std::string serialize(const RoundResult& round);

}  // namespace wpurify
