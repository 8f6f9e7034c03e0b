#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "symrig/scalar.hpp"

namespace symrig {

/// The four complex composition algebras, built by repeated Cayley-Dickson
/// doubling of C with parameter -1.
enum class AlgebraTag { C, CxC, HC, OC };

inline constexpr std::array<AlgebraTag, 4> kAllTags = {AlgebraTag::C, AlgebraTag::CxC, AlgebraTag::HC,
                                                       AlgebraTag::OC};

constexpr std::size_t dim(AlgebraTag tag) {
  switch (tag) {
    case AlgebraTag::C: return 1;
    case AlgebraTag::CxC: return 2;
    case AlgebraTag::HC: return 4;
    case AlgebraTag::OC: return 8;
  }
  return 0;
}

/// Number of doublings applied to C.
constexpr int doubling_level(AlgebraTag tag) {
  switch (tag) {
    case AlgebraTag::C: return 0;
    case AlgebraTag::CxC: return 1;
    case AlgebraTag::HC: return 2;
    case AlgebraTag::OC: return 3;
  }
  return 0;
}

const char* to_string(AlgebraTag tag);
/// Parses "C", "CxC", "HC", "OC"; throws Error(kInvalidArgument) otherwise.
AlgebraTag parse_tag(std::string_view name);

/// e_a * e_b = sign * e_index in the Cayley-Dickson basis.
struct BasisProduct {
  int sign;
  std::size_t index;
};

/// Multiplication table of the basis. The doubling rule is
///   (a, b)(c, d) = (ac - conj(d) b, d a + b conj(c)),
/// with the first half of the coordinates holding a and the second half b.
const std::vector<BasisProduct>& multiplication_table(AlgebraTag tag);

class AlgElement {
 public:
  AlgElement() = default;
  explicit AlgElement(AlgebraTag tag) : tag_(tag), coeffs_(dim(tag)) {}
  AlgElement(AlgebraTag tag, std::vector<ExactScalar> coeffs);

  static AlgElement one(AlgebraTag tag);
  static AlgElement scalar(AlgebraTag tag, const ExactScalar& s);
  static AlgElement basis(AlgebraTag tag, std::size_t k);
  static AlgElement random(AlgebraTag tag, ScalarSampler& sampler);

  AlgebraTag tag() const { return tag_; }
  std::size_t size() const { return coeffs_.size(); }
  const std::vector<ExactScalar>& coeffs() const { return coeffs_; }
  const ExactScalar& operator[](std::size_t k) const { return coeffs_[k]; }
  ExactScalar& operator[](std::size_t k) { return coeffs_[k]; }

  bool is_zero() const;
  /// Lies in span(1).
  bool is_scalar() const;
  /// Coefficient of the unit.
  const ExactScalar& scalar_part() const { return coeffs_[0]; }

  AlgElement& operator+=(const AlgElement& o);
  AlgElement& operator-=(const AlgElement& o);
  AlgElement& operator*=(const ExactScalar& s);

  friend AlgElement operator+(AlgElement a, const AlgElement& b) { return a += b; }
  friend AlgElement operator-(AlgElement a, const AlgElement& b) { return a -= b; }
  friend AlgElement operator*(AlgElement a, const ExactScalar& s) { return a *= s; }
  friend AlgElement operator*(const ExactScalar& s, AlgElement a) { return a *= s; }
  AlgElement operator-() const;

  friend bool operator==(const AlgElement& a, const AlgElement& b) {
    return a.tag_ == b.tag_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const AlgElement& a, const AlgElement& b) { return !(a == b); }

  std::string to_string() const;

 private:
  AlgebraTag tag_ = AlgebraTag::C;
  std::vector<ExactScalar> coeffs_{ExactScalar()};
};

/// Throws Error(kTagMismatch) if the tags differ.
AlgElement multiply(const AlgElement& a, const AlgElement& b);
AlgElement operator*(const AlgElement& a, const AlgElement& b);

AlgElement conjugate(const AlgElement& a);

/// a * conj(a), returned as a scalar. Throws Error(kInternal) if the product
/// has a non-unit component.
ExactScalar norm(const AlgElement& a);

/// a + conj(a), as a scalar.
ExactScalar trace_alg(const AlgElement& a);

}  // namespace symrig
