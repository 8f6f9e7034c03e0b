#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "symrig/algebra.hpp"
#include "symrig/linalg.hpp"

namespace symrig {

/// Element of J3(A): the Hermitian matrix
///
///   [ r1       conj(x3) conj(x2) ]
///   [ x3       r2       conj(x1) ]
///   [ x2       x1       r3       ]
///
/// Coordinates (used by Endomorphism) are ordered r1, r2, r3, x1, x2, x3 with
/// each x expanded in the Cayley-Dickson basis, so the ambient dimension is
/// 3 + 3 dim(A).
class HermitianMatrix {
 public:
  explicit HermitianMatrix(AlgebraTag tag = AlgebraTag::C);
  HermitianMatrix(AlgebraTag tag, std::array<ExactScalar, 3> r, std::array<AlgElement, 3> x);

  static HermitianMatrix identity(AlgebraTag tag);
  static HermitianMatrix diag(AlgebraTag tag, const ExactScalar& r1, const ExactScalar& r2, const ExactScalar& r3);
  /// k-th canonical basis element (unit diagonals first, then x1, x2, x3 blocks).
  static HermitianMatrix basis(AlgebraTag tag, std::size_t k);
  static HermitianMatrix from_coords(AlgebraTag tag, const ScalarVector& coords);
  static HermitianMatrix random(AlgebraTag tag, ScalarSampler& sampler);
  /// Random element with r1 + r2 + r3 = 0.
  static HermitianMatrix random_traceless(AlgebraTag tag, ScalarSampler& sampler);

  AlgebraTag tag() const { return tag_; }
  const ExactScalar& r(std::size_t i) const { return r_[i]; }
  const AlgElement& x(std::size_t i) const { return x_[i]; }

  ScalarVector coords() const;
  bool is_zero() const;

  HermitianMatrix& operator+=(const HermitianMatrix& o);
  HermitianMatrix& operator-=(const HermitianMatrix& o);
  HermitianMatrix& operator*=(const ExactScalar& s);
  friend HermitianMatrix operator+(HermitianMatrix a, const HermitianMatrix& b) { return a += b; }
  friend HermitianMatrix operator-(HermitianMatrix a, const HermitianMatrix& b) { return a -= b; }
  friend HermitianMatrix operator*(HermitianMatrix a, const ExactScalar& s) { return a *= s; }
  friend HermitianMatrix operator*(const ExactScalar& s, HermitianMatrix a) { return a *= s; }
  friend bool operator==(const HermitianMatrix& a, const HermitianMatrix& b) {
    return a.tag_ == b.tag_ && a.r_ == b.r_ && a.x_ == b.x_;
  }
  friend bool operator!=(const HermitianMatrix& a, const HermitianMatrix& b) { return !(a == b); }

  std::string to_string() const;

 private:
  AlgebraTag tag_;
  std::array<ExactScalar, 3> r_;
  std::array<AlgElement, 3> x_;
};

/// 3 + 3 dim(A).
constexpr std::size_t jordan_dim(AlgebraTag tag) { return 3 + 3 * dim(tag); }

/// Plain 3x3 matrix over A. Only used as a workspace for products; Hermitian
/// results are read back through `to_hermitian`.
struct AlgMatrix3 {
  AlgebraTag tag;
  std::array<AlgElement, 9> e;

  const AlgElement& operator()(std::size_t i, std::size_t j) const { return e[3 * i + j]; }
  AlgElement& operator()(std::size_t i, std::size_t j) { return e[3 * i + j]; }
};

AlgMatrix3 to_matrix(const HermitianMatrix& a);
/// Throws Error(kHermiticityBroken) if `m` is not Hermitian with scalar diagonal.
HermitianMatrix to_hermitian(const AlgMatrix3& m);
AlgMatrix3 matmul(const AlgMatrix3& a, const AlgMatrix3& b);

/// A o B = (AB + BA) / 2.
HermitianMatrix jordan_product(const HermitianMatrix& a, const HermitianMatrix& b);

ExactScalar trace(const HermitianMatrix& a);
/// sum_i r_i^2 + 2 x_i conj(x_i).
ExactScalar trace_sq(const HermitianMatrix& a);
/// Closed formula for tr(A^3). The six-term cyclic sum of triple products is
/// evaluated with left-nested products and its unit component is taken; for
/// OC the non-unit remainder is an associator and carries no information.
ExactScalar trace_cube(const HermitianMatrix& a);

/// com(A) = A^2 - tr(A) A + ((tr A)^2 - tr(A^2))/2 Id.
HermitianMatrix comatrix(const HermitianMatrix& a);
/// Expanded cubic formula in r_i, x_i.
ExactScalar determinant(const HermitianMatrix& a);
/// tr(A^3)/3 - tr(A) tr(A^2)/2 + (tr A)^3/6, with all traces taken of Jordan powers.
ExactScalar determinant_via_traces(const HermitianMatrix& a);

HermitianMatrix cross(const HermitianMatrix& a, const HermitianMatrix& b);
/// (A, B, C) = tr(A o (B x C)).
ExactScalar triple(const HermitianMatrix& a, const HermitianMatrix& b, const HermitianMatrix& c);

/// Permutation of {0,1,2}; image[i] is the image of i.
struct Permutation {
  std::array<int, 3> image{0, 1, 2};

  static Permutation identity() { return {}; }
  static Permutation transposition(int a, int b);
  /// All six, in lexicographic order of images.
  static std::vector<Permutation> all();

  int operator()(int i) const { return image[static_cast<std::size_t>(i)]; }
  /// (p * q)(i) = p(q(i)).
  friend Permutation operator*(const Permutation& p, const Permutation& q);
  Permutation inverse() const;
  friend bool operator==(const Permutation& a, const Permutation& b) { return a.image == b.image; }
  std::string to_string() const;
};

/// M12 and M23 as 3x3 scalar matrices over A.
AlgMatrix3 transposition_matrix(AlgebraTag tag, int a);

/// sigma_p(A), with sigma_p(A)_{ij} = A_{p(i) p(j)}; in particular
/// sigma_p(diag(r1, r2, r3)) = diag(r_{p(1)}, r_{p(2)}, r_{p(3)}). Computed as a
/// sequence of conjugations A -> M A M by the stored matrices M12, M23, applying
/// the generators of the word p = t1 t2 ... tk from t1 onwards.
/// As a consequence sigma_p o sigma_q = sigma_{q p}.
HermitianMatrix sigma_action(const Permutation& p, const HermitianMatrix& a);

/// Word in the generators (0 1), (1 2) representing p (shortest, deterministic).
std::vector<int> generator_word(const Permutation& p);

}  // namespace symrig
