#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "symrig/cone.hpp"
#include "symrig/surface.hpp"

namespace symrig {

/// Coefficients of D_{1,0} = d0 F0 + d1 F1 + d2 (F2 + F3) and the analogous E_{1,0}.
struct CoefficientSolution {
  long d0 = 0, d1 = 0, d2 = 0, e0 = 0, e1 = 0, e2 = 0;

  friend auto operator<=>(const CoefficientSolution&, const CoefficientSolution&) = default;
  std::array<long, 6> tuple() const { return {d0, d1, d2, e0, e1, e2}; }
  std::string to_string() const;
};

/// Right-hand sides of d0+e0 = a, d1+e2 = b, d2+e1 = c, d2+e2 = e.
struct CoefficientSystem {
  long d0_e0 = 1;
  long d1_e2 = 1;
  long d2_e1 = 1;
  long d2_e2 = 0;
};

/// All nonnegative integer solutions, in decreasing lexicographic order of the tuple.
std::vector<CoefficientSolution> solve_coefficient_system(const CoefficientSystem& sys = {});

/// Classes of D_{i,0} and E_{j,0} (keys "D1".."D3", "E1".."E3") on the collinear
/// blowup, where F0 = L - E1 - E2 - E3 and F_i = E_i. Throws Error(kInvalidSolution)
/// unless sol solves the default system.
std::map<std::string, DivisorClass> divisor_assignments(const CoefficientSolution& sol);

/// The involution D_{i,0} <-> E_{i,0} extended linearly to Pic of the collinear
/// blowup. Throws Error(kNotIsometry) if the extension is not an isometry.
PicAction theta0_action(const CoefficientSolution& sol);

bool is_involution(const PicAction& a);

/// Writes a class of the collinear blowup in the basis F0..F3, e.g. "F0+F1".
std::string f_basis_string(const DivisorClass& c);

struct BoundaryComponent {
  std::string label;
  long coefficient = 0;
  long self_intersection = 0;
};

struct BlowupLocation {
  enum class Kind { kSmoothPoint, kNode };
  Kind kind = Kind::kSmoothPoint;
  std::size_t first = 0;
  std::size_t second = 0;  // only for kNode

  static BlowupLocation smooth(std::size_t c) { return {Kind::kSmoothPoint, c, 0}; }
  static BlowupLocation node(std::size_t a, std::size_t b) { return {Kind::kNode, a, b}; }
};

/// Boundary curves of a G_a^2-surface with their coefficients in -K, their
/// self-intersections and the (transversal, multiplicity-free) incidence.
class BoundaryModel {
 public:
  static BoundaryModel p2();
  /// Fibre l1 (coefficient n+2, self 0) and minimal section l2 (coefficient 2, self -n).
  static BoundaryModel hirzebruch(long n);

  const std::vector<BoundaryComponent>& components() const { return comps_; }
  bool adjacent(std::size_t a, std::size_t b) const { return adj_[a][b]; }
  std::size_t picard_rank() const { return rank_; }
  const std::vector<std::string>& history() const { return history_; }
  std::size_t degree(std::size_t c) const;

  /// K^2 = sum_ij a_i a_j C_i.C_j.
  long k_squared() const;
  bool coefficients_at_least_two() const;
  /// Minimal (attributes, adjacency) code over all relabelings.
  std::vector<long> canonical_key() const;
  /// Sorted (coefficient, self-intersection, degree) triples.
  std::vector<std::array<long, 3>> invariants() const;
  std::string to_string() const;

  friend BoundaryModel boundary_blowup(const BoundaryModel& m, const BlowupLocation& at);

 private:
  std::vector<BoundaryComponent> comps_;
  std::vector<std::vector<bool>> adj_;
  std::size_t rank_ = 0;
  std::size_t next_label_ = 0;
  std::vector<std::string> history_;
};

/// Throws Error(kInvalidLocation).
BoundaryModel boundary_blowup(const BoundaryModel& m, const BlowupLocation& at);

/// 4 components with coefficients {a, b, b, b}, a != b, where the a-component
/// meets the other three and those are pairwise disjoint.
bool is_terminal_pattern(const BoundaryModel& m);

/// Exhaustive search over boundary blowups up to Picard rank `target_rank`,
/// discarding models with a coefficient below 2, deduplicated by canonical key.
/// Returns the terminal-pattern models, one per class, sorted by key.
std::vector<BoundaryModel> search_equivariant_models(const BoundaryModel& start, std::size_t target_rank = 4);

enum class Verdict { kConsistent, kContradiction };

const char* to_string(Verdict v);

struct ContradictionResult {
  Verdict verdict = Verdict::kConsistent;
  /// Set for kContradiction: the extremal generator, its image and where the image lies.
  std::optional<DivisorClass> source;
  std::optional<DivisorClass> image;
  std::optional<FacePosition> position;
  /// Human-readable witness, e.g. "F1 -> F0+F1 in RELATIVE_INTERIOR_OF_FACE(2) spanned by {F1,F0}".
  std::string witness;
};

/// Checks that inv maps every extremal ray of the Mori cone to an extremal ray.
/// Throws Error(kNotIsometry).
ContradictionResult contradiction_check(const RationalSurface& surface, const PicAction& inv);

}  // namespace symrig
