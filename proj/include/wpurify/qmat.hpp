// qmat.hpp
// Dense complex linear algebra for small multi-qubit systems: state vectors,
// unitary/Hermitian operators, density matrices, tensor products, partial
// trace, computational-basis measurement and entanglement diagnostics.
//
// Bit ordering convention, used everywhere in this project: qubit 0 is the
// MOST significant bit of a computational basis index. |01> on two qubits
// means qubit 0 in |0>, qubit 1 in |1>, basis index 1. Tensor products put
// the left factor's qubits first, so kron(A, B) keeps this convention.
#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace wpurify {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Algebraic identities (norms, traces, hermiticity) hold to 1e-12;
// eigenvalue positivity only to 1e-10.
inline constexpr double kAlgebraTol = 1e-12;
inline constexpr double kPsdTol = 1e-10;
// Measurement branches with probability below this floor are treated as
// impossible and carry no post state.
inline constexpr double kBranchFloor = 1e-14;
// Dense matrices above 2^12 dimensions are rejected outright.
inline constexpr int kMaxQubits = 12;

std::size_t dim_for(int num_qubits);

// Value of the given qubit's bit inside a basis index (qubit 0 = MSB).
int bit_of(std::size_t basis_index, int qubit, int num_qubits);

class DensityMatrix;

class StateVector {
public:
  // Validates length 2^num_qubits and unit squared norm (to 1e-12).
  StateVector(int num_qubits, Vector amplitudes);

  static StateVector computational(int num_qubits, std::size_t basis_index);

  int num_qubits() const { return num_qubits_; }
  std::size_t dim() const { return static_cast<std::size_t>(amplitudes_.size()); }
  const Vector& amplitudes() const { return amplitudes_; }
  Complex amplitude(std::size_t basis_index) const {
    return amplitudes_(static_cast<Eigen::Index>(basis_index));
  }

  // <this|other>
  Complex inner(const StateVector& other) const;

  DensityMatrix projector() const;

private:
  int num_qubits_;
  Vector amplitudes_;
};

class Operator {
public:
  // If `unitary` is set, validates U^dag U = I to 1e-12.
  Operator(int num_qubits, Matrix entries, bool unitary);

  static Operator identity(int num_qubits);
  // A 2x2 block acting on one qubit, identity elsewhere.
  static Operator single_qubit(int num_qubits, int qubit,
                               const Eigen::Matrix2cd& block, bool unitary);
  static Operator pauli_x(int num_qubits, int qubit);
  static Operator cnot(int num_qubits, int control, int target);

  int num_qubits() const { return num_qubits_; }
  std::size_t dim() const { return static_cast<std::size_t>(entries_.rows()); }
  const Matrix& entries() const { return entries_; }
  bool unitary() const { return unitary_; }

private:
  int num_qubits_;
  Matrix entries_;
  bool unitary_;
};

class DensityMatrix {
public:
  // Validates hermiticity and unit trace to 1e-12 and smallest eigenvalue
  // >= -1e-10. A 0-qubit matrix is the scalar [1], the state left after
  // every qubit has been measured away.
  DensityMatrix(int num_qubits, Matrix entries);

  static DensityMatrix maximally_mixed(int num_qubits);

  int num_qubits() const { return num_qubits_; }
  std::size_t dim() const { return static_cast<std::size_t>(entries_.rows()); }
  const Matrix& entries() const { return entries_; }

  double purity() const;  // Tr(rho^2)

private:
  int num_qubits_;
  Matrix entries_;
};

struct MeasurementResult {
  double probability = 0.0;
  // Empty when the branch is impossible (probability < kBranchFloor).
  std::optional<DensityMatrix> post_state;
};

struct Diagnostics {
  double purity = 0.0;
  std::vector<double> marginal_entropies;  // base-2 entropy per qubit
  std::optional<double> negativity_2q;     // present only for 2-qubit states
};

// Tensor products (left factor's qubits become the most significant bits).
// Results beyond kMaxQubits are rejected with a size error.
StateVector tensor_product(const StateVector& a, const StateVector& b);
Operator tensor_product(const Operator& a, const Operator& b);
DensityMatrix tensor_product(const DensityMatrix& a, const DensityMatrix& b);

// U rho U^dag. Requires a unitary-flagged operator of matching dimension.
DensityMatrix apply_operator(const DensityMatrix& rho, const Operator& u);

// Trace out every qubit not in `keep`. Kept qubits stay in ascending
// original order. `keep` must be nonempty, unique and in range.
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep);

// Project onto `outcome` (one '0'/'1' per entry of `qubits`), then trace the
// measured qubits out of the renormalized state. Remaining qubits keep their
// ascending original order.
MeasurementResult measure_computational(const DensityMatrix& rho,
                                        const std::vector<int>& qubits,
                                        std::string_view outcome);

Diagnostics diagnostics(const DensityMatrix& rho);

// <psi|rho|psi>
double expectation(const DensityMatrix& rho, const StateVector& psi);

// Qubit layout for two-copy multi-party protocols: party i holds the source
// qubit i and the target qubit num_parties + i. Global indices are a
// permutation of 0 .. 2k-1.
class QubitLayout {
public:
  explicit QubitLayout(int num_parties);

  int num_parties() const { return num_parties_; }
  int total_qubits() const { return 2 * num_parties_; }
  int source_qubit(int party) const;
  int target_qubit(int party) const;
  std::vector<int> target_qubits() const;
  static char party_label(int party);  // 'A', 'B', 'C', 'D'

private:
  int num_parties_;
};

}  // namespace wpurify
