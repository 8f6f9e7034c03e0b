#include "symrig/surface.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>

#include "symrig/error.hpp"

namespace symrig {

namespace {

long det2(const LatticePoint& a, const LatticePoint& b) { return a.first * b.second - a.second * b.first; }

bool upper_half(const LatticePoint& v) { return v.second > 0 || (v.second == 0 && v.first > 0); }

bool angle_less(const LatticePoint& a, const LatticePoint& b) {
  if (upper_half(a) != upper_half(b)) return upper_half(a);
  return det2(a, b) > 0;
}

}  // namespace

// ---------------------------------------------------------------------------
// Fans

Fan2D::Fan2D(std::vector<LatticePoint> rays) : rays_(std::move(rays)) {
  const std::size_t n = rays_.size();
  if (n < 3) throw Error(ErrorCode::kInvalidArgument, "a complete fan needs at least 3 rays");
  std::size_t wraps = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& v = rays_[i];
    const auto& w = rays_[(i + 1) % n];
    if (std::gcd(v.first, v.second) != 1) throw Error(ErrorCode::kInvalidArgument, "fan ray is not primitive");
    if (det2(v, w) != 1) throw Error(ErrorCode::kInvalidArgument, "adjacent rays are not a positive Z-basis");
    if (!angle_less(v, w)) ++wraps;
  }
  if (wraps != 1) throw Error(ErrorCode::kInvalidArgument, "rays wind around the origin more than once");
}

std::vector<long> Fan2D::self_intersections() const {
  const std::size_t n = rays_.size();
  std::vector<long> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& prev = rays_[(i + n - 1) % n];
    const auto& next = rays_[(i + 1) % n];
    const auto& v = rays_[i];
    const long sx = prev.first + next.first;
    const long sy = prev.second + next.second;
    // sx = a * v.x and sy = a * v.y; v is primitive so one coordinate is nonzero.
    const long a = v.first != 0 ? sx / v.first : sy / v.second;
    out[i] = -a;
  }
  return out;
}

Fan2D fan_p2() { return Fan2D({{1, 0}, {0, 1}, {-1, -1}}); }

Fan2D fan_hirzebruch(long n) {
  if (n < 0) throw Error(ErrorCode::kInvalidArgument, "Hirzebruch index must be nonnegative");
  return Fan2D({{1, 0}, {0, 1}, {-1, n}, {0, -1}});
}

Fan2D toric_blowup(const Fan2D& f, std::size_t corner) {
  if (corner >= f.size()) throw Error(ErrorCode::kInvalidCorner, "corner " + std::to_string(corner) + " out of range");
  std::vector<LatticePoint> rays = f.rays();
  const auto& a = rays[corner];
  const auto& b = rays[(corner + 1) % rays.size()];
  const LatticePoint sum{a.first + b.first, a.second + b.second};
  rays.insert(rays.begin() + static_cast<long>(corner) + 1, sum);
  return Fan2D(std::move(rays));
}

Fan2D fan_dp6() {
  Fan2D f = toric_blowup(fan_p2(), 0);  // (1,0),(1,1),(0,1),(-1,-1)
  f = toric_blowup(f, 2);                // inserts (-1,0)
  return toric_blowup(f, 4);             // inserts (0,-1)
}

std::optional<std::array<long, 4>> fans_isomorphic(const Fan2D& a, const Fan2D& b) {
  if (a.size() != b.size()) return std::nullopt;
  long bound = 1;
  for (const auto* f : {&a, &b})
    for (const auto& r : f->rays()) bound = std::max({bound, std::labs(r.first), std::labs(r.second)});
  const std::set<LatticePoint> target(b.rays().begin(), b.rays().end());
  for (long p = -bound; p <= bound; ++p)
    for (long q = -bound; q <= bound; ++q)
      for (long r = -bound; r <= bound; ++r)
        for (long s = -bound; s <= bound; ++s) {
          if (std::labs(p * s - q * r) != 1) continue;
          bool ok = true;
          for (const auto& v : a.rays())
            if (!target.count({p * v.first + q * v.second, r * v.first + s * v.second})) {
              ok = false;
              break;
            }
          if (ok) return std::array<long, 4>{p, q, r, s};
        }
  return std::nullopt;
}

Fan2D monomial_normal_fan(const std::vector<LatticePoint>& exponents) {
  if (exponents.size() < 3) throw Error(ErrorCode::kDegenerate, "need at least three exponents");
  const LatticePoint base = exponents.front();
  std::vector<IntVector> diffs;
  for (const auto& e : exponents) diffs.push_back({Integer(e.first - base.first), Integer(e.second - base.second)});
  const IntMatrix hnf = hermite_normal_form(IntMatrix::from_rows(diffs, 2));
  if (hnf.rows() != 2) throw Error(ErrorCode::kDegenerate, "exponents are collinear");
  IntMatrix cols(2, 2);  // basis vectors as columns
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) cols(j, i) = hnf(i, j);
  std::vector<LatticePoint> coords;
  for (const auto& d : diffs) {
    auto c = solve_rational(cols, d);
    if (!c || (*c)[0].get_den() != 1 || (*c)[1].get_den() != 1)
      throw Error(ErrorCode::kInternal, "difference not in its own lattice");
    coords.emplace_back((*c)[0].get_num().get_si(), (*c)[1].get_num().get_si());
  }
  std::vector<LatticePoint> rays;
  for (const auto& r : lattice_polygon_normal_fan(coords)) rays.emplace_back(r[0].get_si(), r[1].get_si());
  return Fan2D(std::move(rays));
}

Fan2D orbit_closure_surface() {
  const std::vector<LatticePoint> t1 = {{2, 0}, {0, 2}, {-2, -2}};
  const std::vector<LatticePoint> t2 = {{-2, 0}, {0, -2}, {2, 2}};
  Fan2D fan = monomial_normal_fan(minkowski_sum(t1, t2));
  if (!fans_isomorphic(fan, fan_dp6())) throw Error(ErrorCode::kInternal, "orbit closure is not the hexagonal fan");
  return fan;
}

// ---------------------------------------------------------------------------
// Surfaces

RationalSurface RationalSurface::toric(const Fan2D& fan, const std::vector<std::string>& labels,
                                       std::optional<std::vector<std::string>> basis) {
  const std::size_t n = fan.size();
  if (labels.size() != n) throw Error(ErrorCode::kInvalidArgument, "one label per ray required");
  auto index_of = [&](const std::string& l) {
    auto it = std::find(labels.begin(), labels.end(), l);
    if (it == labels.end()) throw Error(ErrorCode::kUnknownLabel, l);
    return static_cast<std::size_t>(it - labels.begin());
  };
  const auto& v = fan.rays();

  std::vector<std::size_t> basis_idx;
  std::size_t p = n, q = n;
  if (basis) {
    if (basis->size() != n - 2) throw Error(ErrorCode::kInvalidArgument, "Pic basis must have n - 2 classes");
    for (const auto& l : *basis) basis_idx.push_back(index_of(l));
    for (std::size_t i = 0; i < n; ++i)
      if (std::find(basis_idx.begin(), basis_idx.end(), i) == basis_idx.end()) (p == n ? p : q) = i;
    if (q == n) throw Error(ErrorCode::kInvalidArgument, "Pic basis labels repeat");
  } else {
    for (std::size_t i = 0; i < n && q == n; ++i)
      for (std::size_t j = i + 1; j < n && q == n; ++j)
        if (std::labs(det2(v[i], v[j])) == 1) p = i, q = j;
    for (std::size_t i = 0; i < n; ++i)
      if (i != p && i != q) basis_idx.push_back(i);
  }
  const long det = det2(v[p], v[q]);
  if (std::labs(det) != 1) throw Error(ErrorCode::kInvalidArgument, "eliminated rays must form a Z-basis");
  // Dual basis: <m_p, v_p> = 1, <m_p, v_q> = 0 and symmetrically.
  const LatticePoint mp{v[q].second * det, -v[q].first * det};
  const LatticePoint mq{-v[p].second * det, v[p].first * det};
  auto pair = [](const LatticePoint& m, const LatticePoint& x) { return m.first * x.first + m.second * x.second; };

  RationalSurface s;
  s.origin_ = SurfaceOrigin::kToric;
  s.fan_ = fan;
  s.labels_ = labels;
  const std::size_t r = n - 2;
  for (std::size_t k = 0; k < r; ++k) {
    s.basis_.push_back(labels[basis_idx[k]]);
    DivisorClass e(r, Integer(0));
    e[k] = 1;
    s.classes_[labels[basis_idx[k]]] = e;
  }
  // Principal divisor of m: sum_k <m, v_k> D_k = 0.
  for (auto [idx, m] : {std::pair{p, mp}, std::pair{q, mq}}) {
    DivisorClass c(r, Integer(0));
    for (std::size_t k = 0; k < r; ++k) c[k] = -pair(m, v[basis_idx[k]]);
    s.classes_[labels[idx]] = c;
  }
  const auto self = fan.self_intersections();
  s.form_ = IntMatrix(r, r);
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b) {
      const std::size_t i = basis_idx[a], j = basis_idx[b];
      if (i == j)
        s.form_(a, b) = self[i];
      else if ((i + 1) % n == j || (j + 1) % n == i)
        s.form_(a, b) = 1;
    }
  return s;
}

RationalSurface RationalSurface::blowup_p2(std::size_t points,
                                           const std::vector<std::array<std::size_t, 3>>& collinear) {
  RationalSurface s;
  s.origin_ = SurfaceOrigin::kBlowupP2;
  s.collinear_ = collinear;
  const std::size_t r = points + 1;
  auto unit = [r](std::size_t k) {
    DivisorClass e(r, Integer(0));
    e[k] = 1;
    return e;
  };
  s.basis_.push_back("L");
  s.classes_["L"] = unit(0);
  s.labels_.push_back("L");
  for (std::size_t i = 1; i <= points; ++i) {
    const std::string l = "E" + std::to_string(i);
    s.basis_.push_back(l);
    s.labels_.push_back(l);
    s.classes_[l] = unit(i);
  }
  for (const auto& t : collinear)
    for (std::size_t pt : t)
      if (pt < 1 || pt > points) throw Error(ErrorCode::kInvalidArgument, "collinear point out of range");
  auto on_common_line = [&](std::size_t i, std::size_t j) {
    for (const auto& t : collinear)
      if (std::count(t.begin(), t.end(), i) && std::count(t.begin(), t.end(), j)) return true;
    return false;
  };
  for (std::size_t i = 1; i <= points; ++i)
    for (std::size_t j = i + 1; j <= points; ++j) {
      if (on_common_line(i, j)) continue;
      const std::string l = "L" + std::to_string(i) + std::to_string(j);
      s.labels_.push_back(l);
      s.classes_[l] = unit(0) - unit(i) - unit(j);
    }
  for (std::size_t k = 0; k < collinear.size(); ++k) {
    const std::string l = "F" + std::to_string(k);
    DivisorClass c = unit(0);
    for (std::size_t pt : collinear[k]) c = c - unit(pt);
    s.labels_.push_back(l);
    s.classes_[l] = c;
  }
  s.form_ = IntMatrix(r, r);
  s.form_(0, 0) = 1;
  for (std::size_t i = 1; i < r; ++i) s.form_(i, i) = -1;
  return s;
}

DivisorClass RationalSurface::boundary_class(const std::string& label) const {
  auto it = classes_.find(label);
  if (it == classes_.end()) throw Error(ErrorCode::kUnknownLabel, "no class named " + label);
  return it->second;
}

long RationalSurface::intersection(const DivisorClass& a, const DivisorClass& b) const {
  if (a.size() != form_.rows() || b.size() != form_.rows())
    throw Error(ErrorCode::kInvalidArgument, "divisor class length does not match Pic rank");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) s += a[i] * form_(i, j) * b[j];
  return s.get_si();
}

DivisorClass RationalSurface::anticanonical() const {
  DivisorClass k(picard_rank(), Integer(0));
  if (origin_ == SurfaceOrigin::kToric) {
    for (std::size_t i = 0; i < fan_->size(); ++i) k = k + boundary_class(labels_[i]);
  } else {
    k[0] = 3;
    for (std::size_t i = 1; i < k.size(); ++i) k[i] = -1;
  }
  return k;
}

PicardBasis picard_basis(const RationalSurface& s) { return {s.picard_rank(), s.basis_labels()}; }

DivisorClass boundary_class(const RationalSurface& s, const std::string& label) { return s.boundary_class(label); }

long intersection(const RationalSurface& s, const DivisorClass& a, const DivisorClass& b) {
  return s.intersection(a, b);
}

bool linear_equivalent(const RationalSurface& s, const DivisorClass& a, const DivisorClass& b) {
  if (a.size() != s.picard_rank() || b.size() != s.picard_rank())
    throw Error(ErrorCode::kInvalidArgument, "divisor class length does not match Pic rank");
  return a == b;
}

DivisorClass operator+(const DivisorClass& a, const DivisorClass& b) {
  DivisorClass c = a;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b[i];
  return c;
}

DivisorClass operator-(const DivisorClass& a, const DivisorClass& b) {
  DivisorClass c = a;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b[i];
  return c;
}

DivisorClass operator*(long k, const DivisorClass& a) {
  DivisorClass c = a;
  for (auto& x : c) x *= k;
  return c;
}

RationalSurface y_surface() {
  return RationalSurface::toric(fan_dp6(), {"D1", "E3", "D2", "E1", "D3", "E2"},
                                std::vector<std::string>{"D1", "E1", "E2", "E3"});
}

RationalSurface blowup_p2_config(bool collinear) {
  if (collinear) return RationalSurface::blowup_p2(3, {{1, 2, 3}});
  return RationalSurface::blowup_p2(3, {});
}

// ---------------------------------------------------------------------------
// Actions

bool is_isometry(const IntMatrix& m, const IntMatrix& q) { return m.transpose() * q * m == q; }

PicAction PicAction::make(const RationalSurface& s, IntMatrix m, std::string label) {
  if (m.rows() != s.picard_rank() || m.cols() != s.picard_rank())
    throw Error(ErrorCode::kInvalidArgument, "action matrix does not match Pic rank");
  if (!is_isometry(m, s.intersection_form()))
    throw Error(ErrorCode::kNotIsometry, label + " does not preserve the intersection form");
  return {std::move(m), std::move(label)};
}

PicAction PicAction::from_images(const RationalSurface& s, const std::vector<DivisorClass>& images,
                                 std::string label) {
  const std::size_t r = s.picard_rank();
  if (images.size() != r) throw Error(ErrorCode::kInvalidArgument, "one image per basis class required");
  IntMatrix m(r, r);
  for (std::size_t c = 0; c < r; ++c)
    for (std::size_t i = 0; i < r; ++i) m(i, c) = images[c][i];
  return make(s, std::move(m), std::move(label));
}

std::string permutation_label(const Permutation& p) {
  if (p == Permutation::identity()) return "id";
  std::vector<int> moved;
  for (int i = 0; i < 3; ++i)
    if (p(i) != i) moved.push_back(i + 1);
  if (moved.size() == 2) return "sigma" + std::to_string(moved[0]) + std::to_string(moved[1]);
  // 3-cycle written starting at 1.
  return p(0) == 1 ? "sigma123" : "sigma132";
}

std::vector<PicAction> s3_pic_actions() {
  const RationalSurface y = y_surface();
  std::vector<PicAction> out;
  for (const auto& p : Permutation::all()) {
    auto d = [&](int i) { return y.boundary_class("D" + std::to_string(p(i) + 1)); };
    auto e = [&](int i) { return y.boundary_class("E" + std::to_string(p(i) + 1)); };
    out.push_back(PicAction::from_images(y, {d(0), e(0), e(1), e(2)}, permutation_label(p)));
  }
  return out;
}

PicAction theta_pic_action() {
  const RationalSurface y = y_surface();
  return PicAction::from_images(
      y, {y.boundary_class("E1"), y.boundary_class("D1"), y.boundary_class("D2"), y.boundary_class("D3")}, "theta");
}

InvariantLattice invariant_sublattice(const std::vector<PicAction>& actions) {
  if (actions.empty()) throw Error(ErrorCode::kInvalidArgument, "no actions given");
  const std::size_t r = actions.front().matrix.rows();
  std::vector<IntVector> rows;
  for (const auto& a : actions) {
    if (a.matrix.rows() != r) throw Error(ErrorCode::kInvalidArgument, "actions on different lattices");
    const IntMatrix d = a.matrix - IntMatrix::identity(r);
    for (std::size_t i = 0; i < r; ++i) rows.push_back(d.row(i));
  }
  const auto ker = integer_kernel(IntMatrix::from_rows(rows, r));
  InvariantLattice out;
  if (ker.empty()) return out;
  const IntMatrix h = hermite_normal_form(IntMatrix::from_rows(ker, r));
  out.rank = h.rows();
  for (std::size_t i = 0; i < h.rows(); ++i) out.basis.push_back(h.row(i));
  return out;
}

// ---------------------------------------------------------------------------
// Curves

std::vector<DivisorClass> negative_curves(const RationalSurface& s) {
  std::vector<DivisorClass> out;
  if (s.origin() == SurfaceOrigin::kToric) {
    const auto self = s.fan()->self_intersections();
    for (std::size_t i = 0; i < self.size(); ++i)
      if (self[i] < 0) out.push_back(s.boundary_class(s.class_labels()[i]));
    return out;
  }
  // Three-point classification: exceptional curves, lines through two points
  // not on a common line with a third, and lines through three collinear points.
  for (const auto& l : s.class_labels())
    if (l != "L") out.push_back(s.boundary_class(l));
  return out;
}

RationalCone mori_cone(const RationalSurface& s) {
  if (s.origin() == SurfaceOrigin::kToric) {
    std::vector<DivisorClass> all;
    for (const auto& l : s.class_labels()) all.push_back(s.boundary_class(l));
    return RationalCone(s.picard_rank(), all);
  }
  return RationalCone(s.picard_rank(), negative_curves(s));
}

IntMatrix y_to_blowup_map() {
  return IntMatrix::from_rows(std::vector<std::vector<long>>{{1, 0, 0, 0}, {0, 1, 0, 0}, {-1, 0, 1, 0}, {-1, 0, 0, 1}});
}

}  // namespace symrig
