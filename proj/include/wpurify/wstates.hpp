// wstates.hpp
// Mixed states diagonal in the three-qubit genuine basis: the general
// eight-coefficient mixture, the one-parameter concise (Werner-like) family,
// the twirl onto that family, and the W-fraction figure of merit.
#pragma once

#include <array>
#include <istream>
#include <string_view>

#include "wpurify/qmat.hpp"

namespace wpurify {

// Eight nonnegative weights summing to one, ordered like the genuine basis:
// entry 0 weights GB1, entry 5 weights GB6, entries 6 and 7 the GHZ pair.
class CoefficientVector {
public:
  explicit CoefficientVector(const std::array<double, 8>& values);

  // The one-parameter family: c1 on GB1, (1-c1)/7 on each other state.
  static CoefficientVector concise(double c1);

  // Parses 8 whitespace- or comma-separated decimal numbers. Rejects
  // non-simplex input with a message naming the violated invariant.
  static CoefficientVector parse(std::string_view text);
  static CoefficientVector parse(std::istream& in);

  const std::array<double, 8>& values() const { return values_; }
  double operator[](std::size_t i) const { return values_[i]; }

private:
  std::array<double, 8> values_;
};

// rho = sum_i c_i |GB_i><GB_i|
DensityMatrix mixed_from_coeffs(const CoefficientVector& c);

// rho = c1 P1 + (1-c1)/7 (I - P1) with P1 the GB1 projector.
DensityMatrix concise_state(double c1);

// Analytic projection onto the concise family preserving the GB1 overlap:
// rho -> F P1 + (1-F)/7 (I - P1) with F = <GB1|rho|GB1>. Idempotent.
DensityMatrix twirl_to_concise(const DensityMatrix& rho);

struct WFraction {
  double value = 0.0;
  int argmax_index = 1;  // 1-based index into GB1..GB6, smallest index wins ties
};

// Largest overlap with the six W-type basis states.
WFraction w_fraction(const DensityMatrix& rho);

}  // namespace wpurify
