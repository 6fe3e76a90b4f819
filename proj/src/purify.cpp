// purify.cpp

#include "wpurify/purify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "wpurify/numfmt.hpp"

namespace wpurify {

namespace {

std::string outcome_string(std::size_t value, int bits) {
  std::string s(static_cast<std::size_t>(bits), '0');
  for (int i = 0; i < bits; ++i)
    if ((value >> (bits - 1 - i)) & 1u) s[static_cast<std::size_t>(i)] = '1';
  return s;
}

std::size_t outcome_value(std::string_view outcome) {
  if (outcome.empty()) throw std::invalid_argument("outcome bitstring is empty");
  std::size_t value = 0;
  for (char c : outcome) {
    if (c != '0' && c != '1')
      throw std::invalid_argument("outcome must be a string of '0' and '1'");
    value = (value << 1) | static_cast<std::size_t>(c - '0');
  }
  return value;
}

// Max-abs difference between rho and (party marginal) x (pair marginal),
// with the pair qubits in ascending order.
double product_defect(const DensityMatrix& rho, int party,
                      const DensityMatrix& party_state,
                      const DensityMatrix& pair_state) {
  const int n = rho.num_qubits();
  std::vector<int> pair;
  for (int q = 0; q < n; ++q)
    if (q != party) pair.push_back(q);

  double defect = 0.0;
  const auto dim = static_cast<std::size_t>(rho.dim());
  for (std::size_t i = 0; i < dim; ++i) {
    const int ip = bit_of(i, party, n);
    const std::size_t ipair =
        static_cast<std::size_t>(bit_of(i, pair[0], n)) * 2 +
        static_cast<std::size_t>(bit_of(i, pair[1], n));
    for (std::size_t j = 0; j < dim; ++j) {
      const int jp = bit_of(j, party, n);
      const std::size_t jpair =
          static_cast<std::size_t>(bit_of(j, pair[0], n)) * 2 +
          static_cast<std::size_t>(bit_of(j, pair[1], n));
      const Complex expected =
          party_state.entries()(ip, jp) *
          pair_state.entries()(static_cast<Eigen::Index>(ipair),
                               static_cast<Eigen::Index>(jpair));
      defect = std::max(defect,
                        std::abs(rho.entries()(static_cast<Eigen::Index>(i),
                                               static_cast<Eigen::Index>(j)) -
                                 expected));
    }
  }
  return defect;
}

}  // namespace

BranchKind classify(std::string_view outcome) {
  outcome_value(outcome);  // validates
  const bool any_one = outcome.find('1') != std::string_view::npos;
  const bool any_zero = outcome.find('0') != std::string_view::npos;
  if (!any_one) return BranchKind::Success;
  if (!any_zero) return BranchKind::Reject;
  return BranchKind::FailBipartite;
}

std::string_view to_string(BranchKind kind) {
  switch (kind) {
    case BranchKind::Success: return "success";
    case BranchKind::Reject: return "reject";
    case BranchKind::FailBipartite: return "fail-bipartite";
  }
  return "unknown";
}

Operator txor_operator(int num_parties) {
  const QubitLayout layout(num_parties);
  const int n = layout.total_qubits();
  Matrix product = Matrix::Identity(static_cast<Eigen::Index>(dim_for(n)),
                                    static_cast<Eigen::Index>(dim_for(n)));
  for (int p = 0; p < num_parties; ++p)
    product = Operator::cnot(n, layout.source_qubit(p), layout.target_qubit(p))
                  .entries() *
              product;
  return Operator(n, std::move(product), true);
}

const Branch& RoundResult::branch(std::string_view outcome) const {
  const std::size_t value = outcome_value(outcome);
  const std::size_t expected_bits =
      branches.empty() ? 0 : branches.front().outcome.size();
  if (outcome.size() != expected_bits || value >= branches.size())
    throw std::invalid_argument("outcome does not match this round's party count");
  return branches[value];
}

std::vector<Branch> purification_round_copies(const DensityMatrix& copy) {
  const int k = copy.num_qubits();
  const QubitLayout layout(k);
  const DensityMatrix joint = tensor_product(copy, copy);
  const DensityMatrix evolved = apply_operator(joint, txor_operator(k));
  const std::vector<int> targets = layout.target_qubits();

  std::vector<Branch> branches;
  branches.reserve(dim_for(k));
  for (std::size_t value = 0; value < dim_for(k); ++value) {
    Branch branch;
    branch.outcome = outcome_string(value, k);
    MeasurementResult m = measure_computational(evolved, targets, branch.outcome);
    branch.probability = m.probability;
    branch.post_source = std::move(m.post_state);
    branch.classification = classify(branch.outcome);
    branches.push_back(std::move(branch));
  }
  return branches;
}

RoundResult purification_round(const CoefficientVector& c) {
  return RoundResult{c, purification_round_copies(mixed_from_coeffs(c))};
}

ByproductReport byproduct_analysis(const RoundResult& round, std::string_view outcome) {
  const Branch& branch = round.branch(outcome);
  if (branch.classification != BranchKind::FailBipartite)
    throw std::invalid_argument(
        "by-product analysis applies only to fail-bipartite outcomes");
  if (!branch.post_source.has_value() || branch.probability <= kBranchFloor)
    throw std::domain_error("branch '" + std::string(outcome) +
                            "' is impossible for this input");
  const DensityMatrix& rho = *branch.post_source;

  // Pick the party whose removal comes closest to a product state.
  int best_party = 0;
  double best_defect = std::numeric_limits<double>::infinity();
  std::optional<DensityMatrix> best_pair;
  for (int party = 0; party < 3; ++party) {
    std::vector<int> pair;
    for (int q = 0; q < 3; ++q)
      if (q != party) pair.push_back(q);
    const DensityMatrix party_state = partial_trace(rho, {party});
    DensityMatrix pair_state = partial_trace(rho, pair);
    const double defect = product_defect(rho, party, party_state, pair_state);
    if (defect < best_defect) {
      best_defect = defect;
      best_party = party;
      best_pair = std::move(pair_state);
    }
  }

  const Diagnostics pair_diag = diagnostics(*best_pair);
  ByproductReport report{
      std::string(outcome),
      branch.probability,
      pair_diag.purity >= 1.0 - kPsdTol,
      best_defect <= kPsdTol ? std::optional<int>(best_party) : std::nullopt,
      pair_diag.purity,
      pair_diag.marginal_entropies.front(),
      pair_diag.negativity_2q.value_or(0.0),
      std::move(*best_pair)};
  return report;
}

std::string serialize(const RoundResult& round) {
  std::ostringstream out;
  out << format_row({"outcome", "probability", "classification", "w_fraction",
                     "purity"});
  for (const Branch& branch : round.branches) {
    std::string wf = "-";
    std::string purity = "-";
    if (branch.post_source.has_value()) {
      wf = format_sig(w_fraction(*branch.post_source).value);
      purity = format_sig(branch.post_source->purity());
    }
    out << format_row({branch.outcome, format_sig(branch.probability),
                       std::string(to_string(branch.classification)), wf, purity});
  }
  return out.str();
}

}  // namespace wpurify
