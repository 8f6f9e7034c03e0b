#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "symrig/cone.hpp"
#include "symrig/jordan.hpp"
#include "symrig/linalg.hpp"

namespace symrig {

/// Complete smooth fan in Z^2: rays in counterclockwise cyclic order, each
/// adjacent pair a positively oriented Z-basis.
class Fan2D {
 public:
  /// Throws Error(kInvalidArgument) if the rays do not form a smooth complete fan.
  explicit Fan2D(std::vector<LatticePoint> rays);

  const std::vector<LatticePoint>& rays() const { return rays_; }
  std::size_t size() const { return rays_.size(); }
  std::size_t picard_rank() const { return rays_.size() - 2; }
  /// D_i^2 = -a_i where v_{i-1} + v_{i+1} = a_i v_i.
  std::vector<long> self_intersections() const;

  friend bool operator==(const Fan2D&, const Fan2D&) = default;

 private:
  std::vector<LatticePoint> rays_;
};

Fan2D fan_p2();
Fan2D fan_hirzebruch(long n);
/// Inserts v_i + v_{i+1} between rays i and i+1 (cyclically). Throws Error(kInvalidCorner).
Fan2D toric_blowup(const Fan2D& f, std::size_t corner);
/// Fan of the blowup of P^2 at its three coordinate points.
Fan2D fan_dp6();

/// A matrix g in GL2(Z) with g(rays of a) = rays of b, if one exists.
std::optional<std::array<long, 4>> fans_isomorphic(const Fan2D& a, const Fan2D& b);

/// Normal fan of the convex hull of the exponent vectors, computed in the
/// lattice generated by their differences (the character lattice of the torus
/// acting effectively on the orbit closure).
Fan2D monomial_normal_fan(const std::vector<LatticePoint>& exponents);

/// Orbit closure of the diagonal torus: normal fan of the Minkowski sum of the
/// two triangles {(2,0),(0,2),(-2,-2)} and {(-2,0),(0,-2),(2,2)}. Throws
/// Error(kInternal) if the result is not the hexagonal fan.
Fan2D orbit_closure_surface();

enum class SurfaceOrigin { kToric, kBlowupP2 };

using DivisorClass = IntVector;

/// Smooth rational surface with a chosen Pic basis and named boundary classes.
class RationalSurface {
 public:
  /// Toric surface with one label per ray. `basis` names n - 2 boundary divisors
  /// forming the Pic basis (in that order); the two left out must be a Z-basis of
  /// the lattice and are rewritten through the principal relations. Default: drop
  /// the first such pair in ray order.
  static RationalSurface toric(const Fan2D& fan, const std::vector<std::string>& labels,
                               std::optional<std::vector<std::string>> basis = std::nullopt);
  /// Blowup of P^2 at points 1..n; each set in `collinear` lists three collinear points.
  static RationalSurface blowup_p2(std::size_t points, const std::vector<std::array<std::size_t, 3>>& collinear);

  SurfaceOrigin origin() const { return origin_; }
  std::size_t picard_rank() const { return basis_.size(); }
  const std::vector<std::string>& basis_labels() const { return basis_; }
  const std::optional<Fan2D>& fan() const { return fan_; }
  const std::vector<std::array<std::size_t, 3>>& collinear() const { return collinear_; }
  /// Boundary components for toric surfaces; L, E_i and named line classes for blowups.
  const std::vector<std::string>& class_labels() const { return labels_; }
  /// Gram matrix of the intersection form on the Pic basis.
  const IntMatrix& intersection_form() const { return form_; }

  /// Throws Error(kUnknownLabel).
  DivisorClass boundary_class(const std::string& label) const;
  long intersection(const DivisorClass& a, const DivisorClass& b) const;
  DivisorClass anticanonical() const;

 private:
  SurfaceOrigin origin_ = SurfaceOrigin::kToric;
  std::optional<Fan2D> fan_;
  std::vector<std::array<std::size_t, 3>> collinear_;
  std::vector<std::string> basis_;
  std::vector<std::string> labels_;
  std::map<std::string, DivisorClass> classes_;
  IntMatrix form_;
};

/// Pic rank and label list.
struct PicardBasis {
  std::size_t rank = 0;
  std::vector<std::string> labels;
};
PicardBasis picard_basis(const RationalSurface& s);
DivisorClass boundary_class(const RationalSurface& s, const std::string& label);
long intersection(const RationalSurface& s, const DivisorClass& a, const DivisorClass& b);
bool linear_equivalent(const RationalSurface& s, const DivisorClass& a, const DivisorClass& b);

DivisorClass operator+(const DivisorClass& a, const DivisorClass& b);
DivisorClass operator-(const DivisorClass& a, const DivisorClass& b);
DivisorClass operator*(long k, const DivisorClass& a);

/// The del Pezzo surface of degree 6 with hexagon labels D1 E3 D2 E1 D3 E2
/// (counterclockwise from (1,0)) and Pic basis {D1, E1, E2, E3}.
RationalSurface y_surface();

/// Blowup of P^2 at three points, optionally collinear. Collinear surfaces carry
/// the class F0 = L - E1 - E2 - E3; general ones carry Lij = L - Ei - Ej.
RationalSurface blowup_p2_config(bool collinear);

/// Integer matrix on Pic with a label. Constructed through make(), which
/// rejects non-isometries.
struct PicAction {
  IntMatrix matrix;
  std::string label;

  /// Throws Error(kNotIsometry) unless M^T Q M = Q.
  static PicAction make(const RationalSurface& s, IntMatrix m, std::string label);
  /// Matrix whose columns are the images of the basis classes.
  static PicAction from_images(const RationalSurface& s, const std::vector<DivisorClass>& images, std::string label);
  DivisorClass apply(const DivisorClass& c) const { return matrix.apply(c); }
};

bool is_isometry(const IntMatrix& m, const IntMatrix& q);

/// Label used for a permutation of {1,2,3}: "id", "sigma12", "sigma123", ...
std::string permutation_label(const Permutation& p);

/// sigma(D_i) = D_sigma(i), sigma(E_j) = E_sigma(j) on y_surface(), one per
/// element of S3 in Permutation::all() order.
std::vector<PicAction> s3_pic_actions();
/// theta(D_i) = E_i, theta(E_i) = D_i on y_surface().
PicAction theta_pic_action();

struct InvariantLattice {
  std::size_t rank = 0;
  /// Hermite normal form rows.
  std::vector<IntVector> basis;
};

/// Joint fixed lattice of the actions, saturated, in Hermite normal form.
InvariantLattice invariant_sublattice(const std::vector<PicAction>& actions);

/// Classes of irreducible curves with negative self-intersection.
std::vector<DivisorClass> negative_curves(const RationalSurface& s);
/// Cone over the negative curves (blowups) or over all boundary classes (toric).
RationalCone mori_cone(const RationalSurface& s);

/// Matrix from Pic(y_surface()) to Pic(blowup_p2_config(false)) sending
/// D_i -> L - E_j - E_k and E_i -> E_i.
IntMatrix y_to_blowup_map();

}  // namespace symrig
