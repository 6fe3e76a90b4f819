// qmat.cpp

#include "wpurify/qmat.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace wpurify {

namespace {

void require(bool cond, const std::string& message) {
  if (!cond) throw std::invalid_argument(message);
}

// -sum p log2 p over the nonnegative part of a spectrum.
double entropy_bits(const Eigen::VectorXd& eigenvalues) {
  double h = 0.0;
  for (Eigen::Index i = 0; i < eigenvalues.size(); ++i) {
    const double p = eigenvalues(i);
    if (p > 1e-15) h -= p * std::log2(p);
  }
  return h;
}

double min_eigenvalue(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

}  // namespace

std::size_t dim_for(int num_qubits) {
  require(num_qubits >= 0 && num_qubits <= kMaxQubits,
          "qubit count must be between 0 and " + std::to_string(kMaxQubits) +
              ", got " + std::to_string(num_qubits));
  return std::size_t{1} << num_qubits;
}

int bit_of(std::size_t basis_index, int qubit, int num_qubits) {
  return static_cast<int>((basis_index >> (num_qubits - 1 - qubit)) & 1u);
}

// ---------------------------------------------------------------- StateVector

StateVector::StateVector(int num_qubits, Vector amplitudes)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {
  const auto dim = dim_for(num_qubits);
  require(static_cast<std::size_t>(amplitudes_.size()) == dim,
          "state vector over " + std::to_string(num_qubits) +
              " qubits must have length " + std::to_string(dim));
  require(std::abs(amplitudes_.squaredNorm() - 1.0) <= kAlgebraTol,
          "state vector must have unit squared norm within 1e-12");
}

StateVector StateVector::computational(int num_qubits, std::size_t basis_index) {
  const auto dim = dim_for(num_qubits);
  require(basis_index < dim, "basis index out of range");
  Vector amps = Vector::Zero(static_cast<Eigen::Index>(dim));
  amps(static_cast<Eigen::Index>(basis_index)) = Complex{1.0, 0.0};
  return StateVector(num_qubits, std::move(amps));
}

Complex StateVector::inner(const StateVector& other) const {
  require(num_qubits_ == other.num_qubits_, "inner product requires equal qubit counts");
  return amplitudes_.dot(other.amplitudes_);  // Eigen's dot conjugates the left side
}

DensityMatrix StateVector::projector() const {
  return DensityMatrix(num_qubits_, amplitudes_ * amplitudes_.adjoint());
}

// ------------------------------------------------------------------- Operator

Operator::Operator(int num_qubits, Matrix entries, bool unitary)
    : num_qubits_(num_qubits), entries_(std::move(entries)), unitary_(unitary) {
  const auto dim = dim_for(num_qubits);
  require(entries_.rows() == entries_.cols() &&
              static_cast<std::size_t>(entries_.rows()) == dim,
          "operator over " + std::to_string(num_qubits) +
              " qubits must be a " + std::to_string(dim) + "x" +
              std::to_string(dim) + " matrix");
  if (unitary_) {
    const double defect =
        (entries_.adjoint() * entries_ - Matrix::Identity(entries_.rows(), entries_.cols()))
            .cwiseAbs()
            .maxCoeff();
    require(defect <= kAlgebraTol, "operator flagged unitary fails U^dag U = I within 1e-12");
  }
}

Operator Operator::identity(int num_qubits) {
  const auto dim = static_cast<Eigen::Index>(dim_for(num_qubits));
  return Operator(num_qubits, Matrix::Identity(dim, dim), true);
}

Operator Operator::single_qubit(int num_qubits, int qubit,
                                const Eigen::Matrix2cd& block, bool unitary) {
  const auto dim = static_cast<Eigen::Index>(dim_for(num_qubits));
  require(qubit >= 0 && qubit < num_qubits, "qubit index out of range");
  Matrix m = Matrix::Zero(dim, dim);
  for (Eigen::Index row = 0; row < dim; ++row) {
    const int rb = bit_of(static_cast<std::size_t>(row), qubit, num_qubits);
    for (int cb = 0; cb < 2; ++cb) {
      const Complex value = block(rb, cb);
      if (value == Complex{0.0, 0.0}) continue;
      const std::size_t mask = std::size_t{1} << (num_qubits - 1 - qubit);
      const std::size_t col = (static_cast<std::size_t>(row) & ~mask) |
                              (static_cast<std::size_t>(cb) * mask);
      m(row, static_cast<Eigen::Index>(col)) = value;
    }
  }
  return Operator(num_qubits, std::move(m), unitary);
}

Operator Operator::pauli_x(int num_qubits, int qubit) {
  Eigen::Matrix2cd x;
  x << 0, 1, 1, 0;
  return single_qubit(num_qubits, qubit, x, true);
}

Operator Operator::cnot(int num_qubits, int control, int target) {
  const auto dim = static_cast<Eigen::Index>(dim_for(num_qubits));
  require(control >= 0 && control < num_qubits, "control qubit out of range");
  require(target >= 0 && target < num_qubits, "target qubit out of range");
  require(control != target, "control and target must differ");
  Matrix m = Matrix::Zero(dim, dim);
  const std::size_t target_mask = std::size_t{1} << (num_qubits - 1 - target);
  for (std::size_t col = 0; col < static_cast<std::size_t>(dim); ++col) {
    const std::size_t row =
        bit_of(col, control, num_qubits) ? (col ^ target_mask) : col;
    m(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = 1.0;
  }
  return Operator(num_qubits, std::move(m), true);
}

// -------------------------------------------------------------- DensityMatrix

DensityMatrix::DensityMatrix(int num_qubits, Matrix entries)
    : num_qubits_(num_qubits), entries_(std::move(entries)) {
  const auto dim = dim_for(num_qubits);
  require(entries_.rows() == entries_.cols() &&
              static_cast<std::size_t>(entries_.rows()) == dim,
          "density matrix over " + std::to_string(num_qubits) +
              " qubits must be a " + std::to_string(dim) + "x" +
              std::to_string(dim) + " matrix");
  require((entries_ - entries_.adjoint()).cwiseAbs().maxCoeff() <= kAlgebraTol,
          "density matrix must be Hermitian within 1e-12");
  require(std::abs(entries_.trace().real() - 1.0) <= kAlgebraTol &&
              std::abs(entries_.trace().imag()) <= kAlgebraTol,
          "density matrix must have unit trace within 1e-12");
  require(min_eigenvalue(entries_) >= -kPsdTol,
          "density matrix must be positive semidefinite (eigenvalues >= -1e-10)");
}

DensityMatrix DensityMatrix::maximally_mixed(int num_qubits) {
  const auto dim = static_cast<Eigen::Index>(dim_for(num_qubits));
  return DensityMatrix(num_qubits,
                       Matrix::Identity(dim, dim) / static_cast<double>(dim));
}

double DensityMatrix::purity() const {
  // Tr(rho^2) equals the squared Frobenius norm for Hermitian rho.
  return entries_.squaredNorm();
}

// ----------------------------------------------------------------- operations

namespace {

template <typename T>
void check_tensor_size(const T& a, const T& b) {
  require(a.num_qubits() + b.num_qubits() <= kMaxQubits,
          "tensor product of " + std::to_string(a.num_qubits()) + " and " +
              std::to_string(b.num_qubits()) + " qubits exceeds the " +
              std::to_string(kMaxQubits) + "-qubit limit");
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

}  // namespace

StateVector tensor_product(const StateVector& a, const StateVector& b) {
  check_tensor_size(a, b);
  Vector out(a.amplitudes().size() * b.amplitudes().size());
  for (Eigen::Index i = 0; i < a.amplitudes().size(); ++i)
    out.segment(i * b.amplitudes().size(), b.amplitudes().size()) =
        a.amplitudes()(i) * b.amplitudes();
  return StateVector(a.num_qubits() + b.num_qubits(), std::move(out));
}

Operator tensor_product(const Operator& a, const Operator& b) {
  check_tensor_size(a, b);
  return Operator(a.num_qubits() + b.num_qubits(), kron(a.entries(), b.entries()),
                  a.unitary() && b.unitary());
}

DensityMatrix tensor_product(const DensityMatrix& a, const DensityMatrix& b) {
  check_tensor_size(a, b);
  return DensityMatrix(a.num_qubits() + b.num_qubits(), kron(a.entries(), b.entries()));
}

DensityMatrix apply_operator(const DensityMatrix& rho, const Operator& u) {
  require(rho.num_qubits() == u.num_qubits(),
          "operator and state act on different qubit counts");
  require(u.unitary(), "apply_operator requires a unitary-flagged operator");
  return DensityMatrix(rho.num_qubits(),
                       u.entries() * rho.entries() * u.entries().adjoint());
}

namespace {

// Scatter the bits of `packed` (one per qubit in `positions`, in order) into
// a full basis index.
std::size_t scatter_bits(std::size_t packed, const std::vector<int>& positions,
                         int num_qubits) {
  std::size_t index = 0;
  const int k = static_cast<int>(positions.size());
  for (int i = 0; i < k; ++i) {
    const std::size_t bit = (packed >> (k - 1 - i)) & 1u;
    index |= bit << (num_qubits - 1 - positions[i]);
  }
  return index;
}

std::vector<int> complement_of(const std::vector<int>& picked, int num_qubits) {
  std::vector<bool> used(static_cast<std::size_t>(num_qubits), false);
  for (int q : picked) used[static_cast<std::size_t>(q)] = true;
  std::vector<int> rest;
  for (int q = 0; q < num_qubits; ++q)
    if (!used[static_cast<std::size_t>(q)]) rest.push_back(q);
  return rest;
}

void check_qubit_list(const std::vector<int>& qubits, int num_qubits,
                      const char* what) {
  require(!qubits.empty(), std::string(what) + " qubit list must be nonempty");
  std::vector<bool> seen(static_cast<std::size_t>(num_qubits), false);
  for (int q : qubits) {
    require(q >= 0 && q < num_qubits,
            std::string(what) + " qubit index " + std::to_string(q) + " out of range");
    require(!seen[static_cast<std::size_t>(q)],
            std::string(what) + " qubit index " + std::to_string(q) + " repeated");
    seen[static_cast<std::size_t>(q)] = true;
  }
}

}  // namespace

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep) {
  const int n = rho.num_qubits();
  check_qubit_list(keep, n, "keep");

  std::vector<int> kept = keep;
  std::sort(kept.begin(), kept.end());
  const std::vector<int> traced = complement_of(kept, n);

  const std::size_t dk = std::size_t{1} << kept.size();
  const std::size_t dt = std::size_t{1} << traced.size();
  Matrix out = Matrix::Zero(static_cast<Eigen::Index>(dk), static_cast<Eigen::Index>(dk));
  for (std::size_t a = 0; a < dk; ++a) {
    const std::size_t ia = scatter_bits(a, kept, n);
    for (std::size_t b = 0; b < dk; ++b) {
      const std::size_t ib = scatter_bits(b, kept, n);
      Complex sum{0.0, 0.0};
      for (std::size_t t = 0; t < dt; ++t) {
        const std::size_t it = scatter_bits(t, traced, n);
        sum += rho.entries()(static_cast<Eigen::Index>(ia | it),
                             static_cast<Eigen::Index>(ib | it));
      }
      out(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = sum;
    }
  }
  return DensityMatrix(static_cast<int>(kept.size()), std::move(out));
}

MeasurementResult measure_computational(const DensityMatrix& rho,
                                        const std::vector<int>& qubits,
                                        std::string_view outcome) {
  const int n = rho.num_qubits();
  check_qubit_list(qubits, n, "measured");
  require(outcome.size() == qubits.size(),
          "outcome length must match the number of measured qubits");
  std::size_t fixed = 0;
  for (std::size_t i = 0; i < qubits.size(); ++i) {
    const char c = outcome[i];
    require(c == '0' || c == '1', "outcome must be a string of '0' and '1'");
    if (c == '1') fixed |= std::size_t{1} << (n - 1 - qubits[i]);
  }

  const std::vector<int> rest = complement_of(qubits, n);
  const std::size_t dr = std::size_t{1} << rest.size();

  double probability = 0.0;
  for (std::size_t r = 0; r < dr; ++r) {
    const std::size_t i = fixed | scatter_bits(r, rest, n);
    probability += rho.entries()(static_cast<Eigen::Index>(i),
                                 static_cast<Eigen::Index>(i)).real();
  }
  probability = std::clamp(probability, 0.0, 1.0);

  MeasurementResult result;
  result.probability = probability;
  if (probability < kBranchFloor) return result;  // impossible branch, no post state

  Matrix post(static_cast<Eigen::Index>(dr), static_cast<Eigen::Index>(dr));
  for (std::size_t r = 0; r < dr; ++r) {
    const std::size_t ir = fixed | scatter_bits(r, rest, n);
    for (std::size_t c = 0; c < dr; ++c) {
      const std::size_t ic = fixed | scatter_bits(c, rest, n);
      post(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          rho.entries()(static_cast<Eigen::Index>(ir), static_cast<Eigen::Index>(ic)) /
          probability;
    }
  }
  result.post_state = DensityMatrix(static_cast<int>(rest.size()), std::move(post));
  return result;
}

Diagnostics diagnostics(const DensityMatrix& rho) {
  Diagnostics d;
  d.purity = rho.purity();
  const int n = rho.num_qubits();
  d.marginal_entropies.reserve(static_cast<std::size_t>(n));
  for (int q = 0; q < n; ++q) {
    const DensityMatrix marginal = partial_trace(rho, {q});
    Eigen::SelfAdjointEigenSolver<Matrix> solver(marginal.entries(),
                                                 Eigen::EigenvaluesOnly);
    d.marginal_entropies.push_back(entropy_bits(solver.eigenvalues()));
  }
  if (n == 2) {
    // Partial transpose on qubit 1; negativity = sum of |negative eigenvalues|.
    Matrix pt(4, 4);
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        for (int a2 = 0; a2 < 2; ++a2)
          for (int b2 = 0; b2 < 2; ++b2)
            pt(a * 2 + b, a2 * 2 + b2) = rho.entries()(a * 2 + b2, a2 * 2 + b);
    Eigen::SelfAdjointEigenSolver<Matrix> solver(pt, Eigen::EigenvaluesOnly);
    double negativity = 0.0;
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i)
      negativity += std::max(0.0, -solver.eigenvalues()(i));
    d.negativity_2q = negativity;
  }
  return d;
}

double expectation(const DensityMatrix& rho, const StateVector& psi) {
  require(rho.num_qubits() == psi.num_qubits(),
          "expectation requires matching qubit counts");
  const Complex value =
      (psi.amplitudes().adjoint() * rho.entries() * psi.amplitudes())(0, 0);
  return value.real();
}

// ---------------------------------------------------------------- QubitLayout

QubitLayout::QubitLayout(int num_parties) : num_parties_(num_parties) {
  require(num_parties >= 2 && num_parties <= 4,
          "layout supports 2 to 4 parties");
}

int QubitLayout::source_qubit(int party) const {
  require(party >= 0 && party < num_parties_, "party index out of range");
  return party;
}

int QubitLayout::target_qubit(int party) const {
  require(party >= 0 && party < num_parties_, "party index out of range");
  return num_parties_ + party;
}

std::vector<int> QubitLayout::target_qubits() const {
  std::vector<int> qs;
  for (int p = 0; p < num_parties_; ++p) qs.push_back(num_parties_ + p);
  return qs;
}

char QubitLayout::party_label(int party) {
  require(party >= 0 && party < 4, "party index out of range");
  return static_cast<char>('A' + party);
}

}  // namespace wpurify
