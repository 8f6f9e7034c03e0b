#include "symrig/cone.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "symrig/error.hpp"

namespace symrig {

namespace {

Integer dot(const IntVector& a, const IntVector& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::size_t rank_of(const std::vector<IntVector>& vs, std::size_t n) {
  if (vs.empty()) return 0;
  return rational_rank(IntMatrix::from_rows(vs, n));
}

// Linear functional on span(gens), given by an integer vector inside that span.
struct Facet {
  IntVector normal;
  std::set<std::size_t> tight;  // generator indices on the facet
};

// Facets of cone(gens) relative to its linear span. Every facet contains
// dim - 1 independent generators, so enumerating those subsets finds them all.
std::vector<Facet> facets(const std::vector<IntVector>& gens, std::size_t n) {
  std::vector<IntVector> basis;
  for (const auto& g : gens) {
    basis.push_back(g);
    if (rank_of(basis, n) < basis.size()) basis.pop_back();
  }
  const std::size_t d = basis.size();
  std::vector<Facet> out;
  if (d == 0) return out;
  std::set<std::set<std::size_t>> seen;
  std::vector<bool> pick(gens.size(), false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(d - 1), true);
  do {
    std::vector<IntVector> sub;
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (pick[i]) sub.push_back(gens[i]);
    if (rank_of(sub, n) != d - 1) continue;
    // Coefficients c with (sum_j c_j b_j) . s = 0 for s in sub.
    IntMatrix sys(sub.size(), d);
    for (std::size_t r = 0; r < sub.size(); ++r)
      for (std::size_t j = 0; j < d; ++j) sys(r, j) = dot(basis[j], sub[r]);
    auto ker = integer_kernel(sys);
    if (ker.size() != 1) continue;
    IntVector normal(n, Integer(0));
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < n; ++k) normal[k] += ker[0][j] * basis[j][k];
    bool pos = false, neg = false;
    std::set<std::size_t> tight;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const int s = sgn(dot(normal, gens[i]));
      if (s > 0) pos = true;
      if (s < 0) neg = true;
      if (s == 0) tight.insert(i);
    }
    if (pos && neg) continue;
    if (!pos && !neg) continue;  // cone lies in the hyperplane: not a facet
    if (neg)
      for (auto& x : normal) x = -x;
    if (seen.insert(tight).second) out.push_back({primitive(normal), tight});
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

bool in_span(const std::vector<IntVector>& gens, const IntVector& v, std::size_t n) {
  std::vector<IntVector> with = gens;
  with.push_back(v);
  return rank_of(with, n) == rank_of(gens, n);
}

bool cone_contains(const std::vector<IntVector>& gens, const IntVector& v, std::size_t n) {
  if (std::all_of(v.begin(), v.end(), [](const Integer& x) { return sgn(x) == 0; })) return true;
  if (gens.empty() || !in_span(gens, v, n)) return false;
  for (const auto& f : facets(gens, n))
    if (sgn(dot(f.normal, v)) < 0) return false;
  return true;
}

}  // namespace

RationalCone::RationalCone(std::size_t ambient_rank, const std::vector<IntVector>& generators)
    : ambient_(ambient_rank) {
  if (ambient_rank > 6) throw Error(ErrorCode::kInvalidArgument, "cone ambient rank must be at most 6");
  for (const auto& g : generators) {
    if (g.size() != ambient_rank) throw Error(ErrorCode::kInvalidArgument, "generator length mismatch");
    if (std::all_of(g.begin(), g.end(), [](const Integer& x) { return sgn(x) == 0; })) continue;
    IntVector p = primitive(g);
    if (std::find(gens_.begin(), gens_.end(), p) == gens_.end()) gens_.push_back(std::move(p));
  }
}

std::size_t RationalCone::dimension() const { return rank_of(gens_, ambient_); }

bool RationalCone::contains(const IntVector& v) const {
  if (v.size() != ambient_) throw Error(ErrorCode::kInvalidArgument, "vector length mismatch");
  return cone_contains(gens_, v, ambient_);
}

std::vector<IntVector> extremal_rays(const RationalCone& c) {
  const auto& g = c.generators();
  std::vector<IntVector> out;
  for (std::size_t i = 0; i < g.size(); ++i) {
    std::vector<IntVector> others;
    for (std::size_t j = 0; j < g.size(); ++j)
      if (j != i) others.push_back(g[j]);
    if (!cone_contains(others, g[i], c.ambient_rank())) out.push_back(g[i]);
  }
  return out;
}

const char* to_string(FaceKind k) {
  switch (k) {
    case FaceKind::kOnExtremalRay: return "ON_EXTREMAL_RAY";
    case FaceKind::kRelativeInteriorOfFace: return "RELATIVE_INTERIOR_OF_FACE";
    case FaceKind::kInterior: return "INTERIOR";
    case FaceKind::kOutside: return "OUTSIDE";
  }
  return "?";
}

std::string FacePosition::to_string() const {
  std::ostringstream os;
  os << symrig::to_string(kind);
  if (kind == FaceKind::kRelativeInteriorOfFace) os << '(' << face_dim << ')';
  return os.str();
}

FacePosition face_position(const RationalCone& c, const IntVector& v) {
  const std::size_t n = c.ambient_rank();
  if (v.size() != n) throw Error(ErrorCode::kInvalidArgument, "vector length mismatch");
  FacePosition out;
  if (!c.contains(v)) return out;
  if (std::all_of(v.begin(), v.end(), [](const Integer& x) { return sgn(x) == 0; })) {
    out.kind = FaceKind::kRelativeInteriorOfFace;
    return out;
  }
  const std::vector<IntVector> rays = extremal_rays(c);
  const auto fs = facets(rays, n);
  std::vector<bool> on_face(rays.size(), true);
  for (const auto& f : fs) {
    if (sgn(dot(f.normal, v)) != 0) continue;
    for (std::size_t i = 0; i < rays.size(); ++i)
      if (!f.tight.count(i)) on_face[i] = false;
  }
  for (std::size_t i = 0; i < rays.size(); ++i)
    if (on_face[i]) out.face_rays.push_back(rays[i]);
  out.face_dim = rank_of(out.face_rays, n);
  if (out.face_dim == 1)
    out.kind = FaceKind::kOnExtremalRay;
  else if (out.face_dim == rank_of(rays, n))
    out.kind = FaceKind::kInterior;
  else
    out.kind = FaceKind::kRelativeInteriorOfFace;
  return out;
}

namespace {

long cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
  return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
}

// Quadrant-then-cross ordering of directions by angle in [0, 2 pi).
bool angle_less(const IntVector& a, const IntVector& b) {
  auto half = [](const IntVector& v) { return sgn(v[1]) < 0 || (sgn(v[1]) == 0 && sgn(v[0]) < 0); };
  if (half(a) != half(b)) return !half(a);
  return sgn(a[0] * b[1] - a[1] * b[0]) > 0;
}

}  // namespace

std::vector<LatticePoint> convex_hull(std::vector<LatticePoint> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<LatticePoint> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

std::vector<LatticePoint> minkowski_sum(const std::vector<LatticePoint>& a, const std::vector<LatticePoint>& b) {
  std::vector<LatticePoint> out;
  for (const auto& p : a)
    for (const auto& q : b) out.emplace_back(p.first + q.first, p.second + q.second);
  return convex_hull(out);
}

std::vector<IntVector> lattice_polygon_normal_fan(const std::vector<LatticePoint>& vertices) {
  const auto hull = convex_hull(vertices);
  if (hull.size() < 3) throw Error(ErrorCode::kDegenerate, "points are collinear");
  std::vector<IntVector> rays;
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const auto& p = hull[i];
    const auto& q = hull[(i + 1) % hull.size()];
    // Inward normal of a counterclockwise edge direction (dx, dy) is (-dy, dx).
    rays.push_back(primitive({Integer(-(q.second - p.second)), Integer(q.first - p.first)}));
  }
  std::sort(rays.begin(), rays.end(), angle_less);
  return rays;
}

}  // namespace symrig
