#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "symrig/linalg.hpp"

namespace symrig {

/// Polyhedral cone in Z^n (n <= 6) generated by primitive integer vectors.
class RationalCone {
 public:
  /// Generators are made primitive; zero vectors and duplicates are dropped
  /// (first occurrence kept). Throws Error(kInvalidArgument) on rank > 6 or
  /// mismatched lengths.
  RationalCone(std::size_t ambient_rank, const std::vector<IntVector>& generators);

  std::size_t ambient_rank() const { return ambient_; }
  const std::vector<IntVector>& generators() const { return gens_; }
  /// Dimension of the linear span of the generators.
  std::size_t dimension() const;
  /// Exact membership test.
  bool contains(const IntVector& v) const;

 private:
  std::size_t ambient_;
  std::vector<IntVector> gens_;
};

/// Generators that are not nonnegative combinations of the others, in input order.
std::vector<IntVector> extremal_rays(const RationalCone& c);

enum class FaceKind { kOnExtremalRay, kRelativeInteriorOfFace, kInterior, kOutside };

const char* to_string(FaceKind k);

struct FacePosition {
  FaceKind kind = FaceKind::kOutside;
  /// Dimension of the minimal face containing v (unset for kOutside).
  std::size_t face_dim = 0;
  /// Extremal rays spanning that face, in extremal_rays order.
  std::vector<IntVector> face_rays;

  std::string to_string() const;
};

/// Locates v relative to the face lattice of a pointed cone. v = 0 gives
/// kRelativeInteriorOfFace with face_dim 0.
FacePosition face_position(const RationalCone& c, const IntVector& v);

using LatticePoint = std::pair<long, long>;

/// Inward primitive normals of the convex hull edges, counterclockwise, starting
/// from the smallest angle in [0, 2 pi). Throws Error(kDegenerate) when the
/// points are collinear.
std::vector<IntVector> lattice_polygon_normal_fan(const std::vector<LatticePoint>& vertices);

/// Vertices of the convex hull in counterclockwise order.
std::vector<LatticePoint> convex_hull(std::vector<LatticePoint> points);

std::vector<LatticePoint> minkowski_sum(const std::vector<LatticePoint>& a, const std::vector<LatticePoint>& b);

}  // namespace symrig
