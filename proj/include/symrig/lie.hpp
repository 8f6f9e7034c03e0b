#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "symrig/jordan.hpp"

namespace symrig {

/// Linear map on J3(A) in the canonical basis (HermitianMatrix::basis);
/// column k of the matrix holds the coordinates of the image of basis k.
class Endomorphism {
 public:
  explicit Endomorphism(AlgebraTag tag);
  Endomorphism(AlgebraTag tag, ExactMatrix matrix);

  static Endomorphism identity(AlgebraTag tag);
  static Endomorphism zero(AlgebraTag tag) { return Endomorphism(tag); }
  static Endomorphism from_function(AlgebraTag tag,
                                    const std::function<HermitianMatrix(const HermitianMatrix&)>& f);

  AlgebraTag tag() const { return tag_; }
  const ExactMatrix& matrix() const { return matrix_; }
  std::size_t size() const { return matrix_.rows(); }

  HermitianMatrix operator()(const HermitianMatrix& b) const;
  /// (f * g)(B) = f(g(B)).
  friend Endomorphism operator*(const Endomorphism& f, const Endomorphism& g);
  friend Endomorphism operator+(const Endomorphism& f, const Endomorphism& g);
  friend Endomorphism operator-(const Endomorphism& f, const Endomorphism& g);
  friend bool operator==(const Endomorphism& f, const Endomorphism& g) {
    return f.tag_ == g.tag_ && f.matrix_ == g.matrix_;
  }
  friend bool operator!=(const Endomorphism& f, const Endomorphism& g) { return !(f == g); }

  bool is_zero() const { return matrix_.is_zero(); }

 private:
  AlgebraTag tag_;
  ExactMatrix matrix_;
};

/// [f, g] = fg - gf.
Endomorphism commutator(const Endomorphism& f, const Endomorphism& g);

/// B -> 2 A o B for arbitrary A (no trace condition).
Endomorphism jordan_multiplication(const HermitianMatrix& a);

/// mu(A) = [B -> 2 A o B] for traceless A; throws Error(kNotTraceless).
Endomorphism mu(const HermitianMatrix& a);

/// sigma_p as an endomorphism of J3(A).
Endomorphism sigma_endomorphism(AlgebraTag tag, const Permutation& p);

/// Element diag(l1, l2, l3) of the torus T0 (l1 l2 l3 = 1).
class DiagonalTorusElement {
 public:
  /// Throws Error(kTorusConstraint) unless every entry is nonzero and the product is 1.
  DiagonalTorusElement(ExactScalar l1, ExactScalar l2, ExactScalar l3);

  const ExactScalar& operator[](std::size_t i) const { return l_[i]; }
  /// Componentwise product (the group law of T0).
  friend DiagonalTorusElement operator*(const DiagonalTorusElement& s, const DiagonalTorusElement& t);
  DiagonalTorusElement permuted(const Permutation& p) const;
  HermitianMatrix as_matrix(AlgebraTag tag) const;

 private:
  std::array<ExactScalar, 3> l_;
};

/// nu(t) = [B -> t B t], products nested as (t B) t.
Endomorphism nu(AlgebraTag tag, const DiagonalTorusElement& t);

/// The trilinear form (B_i, B_j, B_k) on canonical basis elements, cached per tag.
const std::vector<ExactScalar>& triple_tensor(AlgebraTag tag);
/// The bilinear form tr(B_i o B_j) on canonical basis elements, cached per tag.
const std::vector<ExactScalar>& trace_form(AlgebraTag tag);
/// Coordinates of B_j o B_k: entry ((j * d + k) * d + c), cached per tag.
const std::vector<ExactScalar>& jordan_structure_constants(AlgebraTag tag);

/// Decides (phi(B), B, B) = 0 for all B exactly: the polarized form
/// (phi(B1),B2,B3) + (phi(B2),B1,B3) + (phi(B3),B1,B2) must vanish on every basis triple.
bool is_in_sl3(const Endomorphism& phi);

/// Decides det(g(B)) = det(B) for all B, by comparing the polarized cubic form
/// on every basis triple.
bool preserves_determinant(const Endomorphism& g);

/// Decides tr(g(B)^2) = tr(B^2) for all B (bilinear form on basis pairs).
bool preserves_trace_form(const Endomorphism& g);

/// Checks psi(B o C) = psi(B) o C + B o psi(C) on all basis pairs.
bool is_derivation(const Endomorphism& psi);

/// Field used for the derivation system.
enum class EliminationMode {
  kExact,    ///< Gaussian rationals, streamed sparse elimination.
  kModular,  ///< Two 61/62-bit primes; both ranks must agree.
};

struct DerivationResult {
  std::size_t dimension = 0;
  std::size_t unknowns = 0;
  std::size_t equations = 0;
  std::size_t rank = 0;
  /// Filled only in exact mode when requested.
  std::vector<Endomorphism> basis;
};

/// Builds the derivation system (d^2 unknowns, one equation per basis pair j <= k and
/// output coordinate) and streams it into an incremental eliminator.
DerivationResult derivation_algebra(AlgebraTag tag, EliminationMode mode, bool want_basis = false,
                                    const std::function<void(std::size_t, std::size_t)>& progress = {});

/// Kernel dimension of the derivation system = dim so3(A).
std::size_t derivation_algebra_dim(AlgebraTag tag, EliminationMode mode = EliminationMode::kExact);

struct CentralizerResult {
  std::size_t dimension = 0;
  std::vector<HermitianMatrix> basis;
};

/// {A in J3(A)_0 : [mu(A), mu(B)] = 0 for B in {diag(1,-1,0), diag(0,1,-1)}}.
CentralizerResult centralizer_in_J0(AlgebraTag tag);
std::size_t centralizer_dim_in_J0(AlgebraTag tag);

/// Point of P(C + J + J + C) with homogeneous coordinates
/// [t^3 : t^2 A : t com(A) : det(A)].
class ProjectivePoint {
 public:
  explicit ProjectivePoint(ScalarVector coords);

  const ScalarVector& coords() const { return coords_; }
  /// Equality up to a global nonzero scalar.
  friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b);
  friend bool operator!=(const ProjectivePoint& a, const ProjectivePoint& b) { return !(a == b); }
  /// Copy scaled so the first nonzero coordinate is 1.
  ProjectivePoint normalized() const;

 private:
  ScalarVector coords_;
};

/// Throws Error(kZeroInput) for (0, 0).
ProjectivePoint phi_map(const ExactScalar& t, const HermitianMatrix& a);
/// t^3 = det(A).
bool on_cubic(const ExactScalar& t, const HermitianMatrix& a);

}  // namespace symrig
