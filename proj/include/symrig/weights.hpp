#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "symrig/algebra.hpp"
#include "symrig/scalar.hpp"

namespace symrig {

enum class RootType { A1, A2, C3, F4 };

const char* to_string(RootType t);

using RationalVector = std::vector<Rational>;

/// Root system realized in a rational ambient space. Simple roots are ordered so
/// that the Cartan matrix is the usual one (F4: e2-e3, e3-e4, e4, (e1-e2-e3-e4)/2).
struct RootSystem {
  RootType type;
  std::size_t rank = 0;
  std::vector<RationalVector> simple_roots;
  /// Gram matrix of the ambient form; long roots have squared length 2.
  std::vector<RationalVector> form;

  static RootSystem make(RootType type);

  Rational inner(const RationalVector& a, const RationalVector& b) const;
  /// A_ij = 2 <a_i, a_j> / <a_j, a_j>; row i holds the Dynkin labels of a_i.
  std::vector<std::vector<long>> cartan_matrix() const;
};

/// Textbook Cartan matrix of the named type, same convention as cartan_matrix().
std::vector<std::vector<long>> standard_cartan_matrix(RootType type);

/// Coordinates in the fundamental-weight basis.
struct Weight {
  std::vector<long> labels;

  friend auto operator<=>(const Weight&, const Weight&) = default;
  friend bool operator==(const Weight&, const Weight&) = default;
  bool is_zero() const;
  bool is_dominant() const;
  std::string to_string() const;
};

using WeightDiagram = std::map<Weight, long>;

/// Positive roots in the ambient space, sorted by height then lexicographically.
std::vector<RationalVector> positive_roots(const RootSystem& rs);

/// Coefficients of an ambient vector in the simple-root basis.
RationalVector simple_root_coordinates(const RootSystem& rs, const RationalVector& v);

RationalVector to_ambient(const RootSystem& rs, const Weight& w);

/// Throws Error(kNotDominant).
Integer weyl_dim(const RootSystem& rs, const Weight& lambda);

/// True when the weight lies in the root lattice.
bool in_root_lattice(const RootSystem& rs, const Weight& w);

/// Simple reflection s_i in Dynkin coordinates.
Weight reflect(const RootSystem& rs, const Weight& w, std::size_t i);

/// The dominant element of the Weyl orbit of w.
Weight dominant_conjugate(const RootSystem& rs, const Weight& w);

struct JordanModule {
  RootSystem root_system;
  Weight highest_weight;
};

/// Root system of so3(A) and the highest weight of J3(A)_0, chosen as the unique
/// root-lattice weight with labels in 0..4 whose Weyl dimension is dim J3(A) - 1.
/// Throws Error(kAmbiguous) if that choice is not unique.
JordanModule select_module(AlgebraTag tag);

/// Throws Error(kNotDominant).
WeightDiagram freudenthal_multiplicities(const RootSystem& rs, const Weight& lambda);

long multiplicity(const WeightDiagram& d, const Weight& w);
long diagram_dimension(const WeightDiagram& d);

}  // namespace symrig
