// wstates.cpp

#include "wpurify/wstates.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "wpurify/genuine_basis.hpp"

namespace wpurify {

namespace {

const GenuineBasis& basis3() {
  static const GenuineBasis basis = genuine_basis_3();
  return basis;
}

}  // namespace

CoefficientVector::CoefficientVector(const std::array<double, 8>& values)
    : values_(values) {
  double sum = 0.0;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!(values_[i] >= 0.0))
      throw std::invalid_argument("coefficient " + std::to_string(i + 1) +
                                  " must be nonnegative, got " +
                                  std::to_string(values_[i]));
    sum += values_[i];
  }
  if (std::abs(sum - 1.0) > kAlgebraTol) {
    std::ostringstream msg;
    msg << "coefficients must sum to 1 within 1e-12, got " << sum;
    throw std::invalid_argument(msg.str());
  }
}

CoefficientVector CoefficientVector::concise(double c1) {
  if (!(c1 >= 0.0 && c1 <= 1.0))
    throw std::invalid_argument("concise coefficient must lie in [0, 1], got " +
                                std::to_string(c1));
  // Spread the residue so the eight entries sum to 1 exactly in floating point.
  const double rest = (1.0 - c1) / 7.0;
  std::array<double, 8> values{};
  values[0] = c1;
  double acc = c1;
  for (int i = 1; i < 7; ++i) {
    values[static_cast<std::size_t>(i)] = rest;
    acc += rest;
  }
  values[7] = 1.0 - acc;
  return CoefficientVector(values);
}

CoefficientVector CoefficientVector::parse(std::istream& in) {
  std::string text{std::istreambuf_iterator<char>(in),
                   std::istreambuf_iterator<char>()};
  return parse(text);
}

CoefficientVector CoefficientVector::parse(std::string_view text) {
  std::string normalized(text);
  std::replace(normalized.begin(), normalized.end(), ',', ' ');
  std::istringstream in(normalized);

  std::vector<double> entries;
  std::string token;
  while (in >> token) {
    try {
      std::size_t consumed = 0;
      const double value = std::stod(token, &consumed);
      if (consumed != token.size()) throw std::invalid_argument(token);
      entries.push_back(value);
    } catch (const std::exception&) {
      throw std::invalid_argument("invalid coefficient token '" + token + "'");
    }
  }
  if (entries.size() != 8)
    throw std::invalid_argument("expected 8 coefficients, got " +
                                std::to_string(entries.size()));
  std::array<double, 8> values{};
  std::copy(entries.begin(), entries.end(), values.begin());
  return CoefficientVector(values);
}

DensityMatrix mixed_from_coeffs(const CoefficientVector& c) {
  Matrix rho = Matrix::Zero(8, 8);
  for (int i = 0; i < 8; ++i) {
    const Vector& v = basis3().states[static_cast<std::size_t>(i)].amplitudes();
    rho += c[static_cast<std::size_t>(i)] * (v * v.adjoint());
  }
  return DensityMatrix(3, std::move(rho));
}

DensityMatrix concise_state(double c1) {
  return mixed_from_coeffs(CoefficientVector::concise(c1));
}

DensityMatrix twirl_to_concise(const DensityMatrix& rho) {
  if (rho.num_qubits() != 3)
    throw std::invalid_argument("twirl is defined for three-qubit states");
  const double f =
      std::clamp(expectation(rho, basis3().states[0]), 0.0, 1.0);
  return concise_state(f);
}

WFraction w_fraction(const DensityMatrix& rho) {
  if (rho.num_qubits() != 3)
    throw std::invalid_argument("W fraction is defined for three-qubit states");
  WFraction best;
  best.value = expectation(rho, basis3().states[0]);
  best.argmax_index = 1;
  for (int i = 1; i < 6; ++i) {
    const double overlap = expectation(rho, basis3().states[static_cast<std::size_t>(i)]);
    if (overlap > best.value) {
      best.value = overlap;
      best.argmax_index = i + 1;
    }
  }
  return best;
}

}  // namespace wpurify
