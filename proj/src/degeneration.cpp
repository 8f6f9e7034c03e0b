#include "symrig/degeneration.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "symrig/error.hpp"

namespace symrig {

std::string CoefficientSolution::to_string() const {
  std::ostringstream os;
  os << '(' << d0 << ',' << d1 << ',' << d2 << ',' << e0 << ',' << e1 << ',' << e2 << ')';
  return os.str();
}

std::vector<CoefficientSolution> solve_coefficient_system(const CoefficientSystem& sys) {
  // Every unknown appears in an equation with a nonnegative partner, so it is
  // bounded by the largest right-hand side.
  const long bound = std::max({sys.d0_e0, sys.d1_e2, sys.d2_e1, sys.d2_e2, 0L});
  std::vector<CoefficientSolution> out;
  for (long d0 = 0; d0 <= bound; ++d0)
    for (long d1 = 0; d1 <= bound; ++d1)
      for (long d2 = 0; d2 <= bound; ++d2)
        for (long e0 = 0; e0 <= bound; ++e0)
          for (long e1 = 0; e1 <= bound; ++e1)
            for (long e2 = 0; e2 <= bound; ++e2)
              if (d0 + e0 == sys.d0_e0 && d1 + e2 == sys.d1_e2 && d2 + e1 == sys.d2_e1 && d2 + e2 == sys.d2_e2)
                out.push_back({d0, d1, d2, e0, e1, e2});
  std::reverse(out.begin(), out.end());
  return out;
}

namespace {

// F0 = L - E1 - E2 - E3, F_i = E_i in the basis {L, E1, E2, E3}.
DivisorClass f_class(std::size_t i) {
  if (i == 0) return {1, -1, -1, -1};
  DivisorClass c(4, Integer(0));
  c[i] = 1;
  return c;
}

DivisorClass pattern(long a0, long a1, long a2, std::size_t i) {
  DivisorClass c = a0 * f_class(0);
  for (std::size_t k = 1; k <= 3; ++k) c = c + (k == i ? a1 : a2) * f_class(k);
  return c;
}

}  // namespace

std::map<std::string, DivisorClass> divisor_assignments(const CoefficientSolution& sol) {
  const auto valid = solve_coefficient_system();
  if (std::find(valid.begin(), valid.end(), sol) == valid.end())
    throw Error(ErrorCode::kInvalidSolution, sol.to_string() + " does not solve the coefficient system");
  std::map<std::string, DivisorClass> out;
  for (std::size_t i = 1; i <= 3; ++i) {
    out["D" + std::to_string(i)] = pattern(sol.d0, sol.d1, sol.d2, i);
    out["E" + std::to_string(i)] = pattern(sol.e0, sol.e1, sol.e2, i);
  }
  return out;
}

PicAction theta0_action(const CoefficientSolution& sol) {
  const auto assign = divisor_assignments(sol);
  const RationalSurface y0 = blowup_p2_config(true);
  // Columns X = (D1, D2, D3, E1, E2, E3), Y = (E1, E2, E3, D1, D2, D3); solve M X = Y.
  std::vector<DivisorClass> xs, ys;
  for (std::size_t i = 1; i <= 3; ++i) {
    xs.push_back(assign.at("D" + std::to_string(i)));
    ys.push_back(assign.at("E" + std::to_string(i)));
  }
  for (std::size_t i = 1; i <= 3; ++i) {
    xs.push_back(assign.at("E" + std::to_string(i)));
    ys.push_back(assign.at("D" + std::to_string(i)));
  }
  // Independent subset of the columns.
  std::vector<std::size_t> pick;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    std::vector<IntVector> trial;
    for (std::size_t p : pick) trial.push_back(xs[p]);
    trial.push_back(xs[k]);
    if (rational_rank(IntMatrix::from_rows(trial, 4)) == trial.size()) pick.push_back(k);
  }
  if (pick.size() != 4) throw Error(ErrorCode::kInternal, "boundary classes do not span Pic");
  IntMatrix xt(4, 4);  // rows are the picked columns of X
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) xt(r, c) = xs[pick[r]][c];
  IntMatrix m(4, 4);
  for (std::size_t row = 0; row < 4; ++row) {
    IntVector rhs(4);
    for (std::size_t r = 0; r < 4; ++r) rhs[r] = ys[pick[r]][row];
    auto sol_row = solve_rational(xt, rhs);
    if (!sol_row) throw Error(ErrorCode::kInternal, "theta0 system is inconsistent");
    for (std::size_t c = 0; c < 4; ++c) {
      if ((*sol_row)[c].get_den() != 1) throw Error(ErrorCode::kInternal, "theta0 is not integral");
      m(row, c) = (*sol_row)[c].get_num();
    }
  }
  for (std::size_t k = 0; k < xs.size(); ++k)
    if (m.apply(xs[k]) != ys[k]) throw Error(ErrorCode::kInternal, "theta0 is not a consistent linear map");
  return PicAction::make(y0, std::move(m), "Theta0");
}

bool is_involution(const PicAction& a) {
  return a.matrix * a.matrix == IntMatrix::identity(a.matrix.rows());
}

std::string f_basis_string(const DivisorClass& c) {
  // c = x0 F0 + sum x_i F_i with F0 = L - sum E_i: x0 = c_L, x_i = c_i + c_L.
  std::array<Integer, 4> x{c[0], c[1] + c[0], c[2] + c[0], c[3] + c[0]};
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < 4; ++i) {
    if (sgn(x[i]) == 0) continue;
    if (sgn(x[i]) < 0)
      os << '-';
    else if (!first)
      os << '+';
    if (abs(x[i]) != 1) os << abs(x[i]);
    os << 'F' << i;
    first = false;
  }
  if (first) os << '0';
  return os.str();
}

// ---------------------------------------------------------------------------
// Boundary models

BoundaryModel BoundaryModel::p2() {
  BoundaryModel m;
  m.comps_ = {{"l0", 3, 1}};
  m.adj_ = {{false}};
  m.rank_ = 1;
  m.next_label_ = 1;
  return m;
}

BoundaryModel BoundaryModel::hirzebruch(long n) {
  if (n < 0) throw Error(ErrorCode::kInvalidArgument, "Hirzebruch index must be nonnegative");
  BoundaryModel m;
  m.comps_ = {{"l1", n + 2, 0}, {"l2", 2, -n}};
  m.adj_ = {{false, true}, {true, false}};
  m.rank_ = 2;
  m.next_label_ = 3;
  return m;
}

std::size_t BoundaryModel::degree(std::size_t c) const {
  return static_cast<std::size_t>(std::count(adj_[c].begin(), adj_[c].end(), true));
}

long BoundaryModel::k_squared() const {
  long k = 0;
  for (std::size_t i = 0; i < comps_.size(); ++i)
    for (std::size_t j = 0; j < comps_.size(); ++j) {
      const long dot = i == j ? comps_[i].self_intersection : (adj_[i][j] ? 1 : 0);
      k += comps_[i].coefficient * comps_[j].coefficient * dot;
    }
  return k;
}

bool BoundaryModel::coefficients_at_least_two() const {
  return std::all_of(comps_.begin(), comps_.end(), [](const BoundaryComponent& c) { return c.coefficient >= 2; });
}

std::vector<long> BoundaryModel::canonical_key() const {
  const std::size_t n = comps_.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<long> best;
  do {
    std::vector<long> key;
    for (std::size_t i : perm) {
      key.push_back(comps_[i].coefficient);
      key.push_back(comps_[i].self_intersection);
    }
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b) key.push_back(adj_[perm[a]][perm[b]] ? 1 : 0);
    if (best.empty() || key < best) best = std::move(key);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<std::array<long, 3>> BoundaryModel::invariants() const {
  std::vector<std::array<long, 3>> out;
  for (std::size_t i = 0; i < comps_.size(); ++i)
    out.push_back({comps_[i].coefficient, comps_[i].self_intersection, static_cast<long>(degree(i))});
  std::sort(out.begin(), out.end());
  return out;
}

std::string BoundaryModel::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < comps_.size(); ++i)
    os << (i ? " " : "") << comps_[i].coefficient << comps_[i].label << "^2=" << comps_[i].self_intersection;
  os << "; meets";
  for (std::size_t a = 0; a < comps_.size(); ++a)
    for (std::size_t b = a + 1; b < comps_.size(); ++b)
      if (adj_[a][b]) os << ' ' << comps_[a].label << '-' << comps_[b].label;
  os << '}';
  return os.str();
}

BoundaryModel boundary_blowup(const BoundaryModel& m, const BlowupLocation& at) {
  const std::size_t n = m.comps_.size();
  std::vector<std::size_t> through;
  if (at.kind == BlowupLocation::Kind::kSmoothPoint) {
    if (at.first >= n) throw Error(ErrorCode::kInvalidLocation, "no such component");
    through = {at.first};
  } else {
    if (at.first >= n || at.second >= n || at.first == at.second || !m.adj_[at.first][at.second])
      throw Error(ErrorCode::kInvalidLocation, "components do not meet");
    through = {at.first, at.second};
  }
  BoundaryModel out = m;
  long coef = -1;
  for (std::size_t c : through) {
    coef += m.comps_[c].coefficient;
    --out.comps_[c].self_intersection;
  }
  const std::string label = "l" + std::to_string(out.next_label_++);
  out.comps_.push_back({label, coef, -1});
  for (auto& row : out.adj_) row.push_back(false);
  out.adj_.emplace_back(n + 1, false);
  for (std::size_t c : through) out.adj_[c][n] = out.adj_[n][c] = true;
  if (through.size() == 2) out.adj_[through[0]][through[1]] = out.adj_[through[1]][through[0]] = false;
  ++out.rank_;
  out.history_.push_back(through.size() == 1 ? "point on " + m.comps_[through[0]].label
                                             : "node " + m.comps_[through[0]].label + "-" + m.comps_[through[1]].label);
  return out;
}

bool is_terminal_pattern(const BoundaryModel& m) {
  const auto& c = m.components();
  if (c.size() != 4) return false;
  for (std::size_t a = 0; a < 4; ++a) {
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < 4; ++i)
      if (i != a) rest.push_back(i);
    const long b = c[rest[0]].coefficient;
    if (c[a].coefficient == b) continue;
    if (!std::all_of(rest.begin(), rest.end(), [&](std::size_t i) { return c[i].coefficient == b; })) continue;
    if (!std::all_of(rest.begin(), rest.end(), [&](std::size_t i) { return m.adjacent(a, i); })) continue;
    if (m.adjacent(rest[0], rest[1]) || m.adjacent(rest[0], rest[2]) || m.adjacent(rest[1], rest[2])) continue;
    return true;
  }
  return false;
}

std::vector<BoundaryModel> search_equivariant_models(const BoundaryModel& start, std::size_t target_rank) {
  std::map<std::vector<long>, BoundaryModel> level;
  level.emplace(start.canonical_key(), start);
  for (std::size_t r = start.picard_rank(); r < target_rank; ++r) {
    std::map<std::vector<long>, BoundaryModel> next;
    for (const auto& [key, m] : level) {
      const std::size_t n = m.components().size();
      std::vector<BlowupLocation> locs;
      for (std::size_t c = 0; c < n; ++c) locs.push_back(BlowupLocation::smooth(c));
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
          if (m.adjacent(a, b)) locs.push_back(BlowupLocation::node(a, b));
      for (const auto& loc : locs) {
        BoundaryModel child = boundary_blowup(m, loc);
        if (!child.coefficients_at_least_two()) continue;
        next.emplace(child.canonical_key(), std::move(child));
      }
    }
    level = std::move(next);
  }
  std::vector<BoundaryModel> out;
  for (auto& [key, m] : level)
    if (is_terminal_pattern(m)) out.push_back(std::move(m));
  return out;
}

// ---------------------------------------------------------------------------
// Mori cone test

const char* to_string(Verdict v) { return v == Verdict::kConsistent ? "CONSISTENT" : "CONTRADICTION"; }

namespace {

std::string class_name(const RationalSurface& s, const DivisorClass& c) {
  if (s.origin() == SurfaceOrigin::kBlowupP2 && s.picard_rank() == 4 && !s.collinear().empty())
    return f_basis_string(c);
  for (const auto& l : s.class_labels())
    if (s.boundary_class(l) == c) return l;
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
  os << ')';
  return os.str();
}

}  // namespace

ContradictionResult contradiction_check(const RationalSurface& surface, const PicAction& inv) {
  if (inv.matrix.rows() != surface.picard_rank() || !is_isometry(inv.matrix, surface.intersection_form()))
    throw Error(ErrorCode::kNotIsometry, inv.label + " is not an isometry of Pic");
  const RationalCone cone = mori_cone(surface);
  ContradictionResult out;
  for (const auto& g : extremal_rays(cone)) {
    const DivisorClass img = inv.apply(g);
    FacePosition pos = face_position(cone, img);
    if (pos.kind == FaceKind::kOnExtremalRay) continue;
    out.verdict = Verdict::kContradiction;
    std::ostringstream os;
    os << class_name(surface, g) << " -> " << class_name(surface, img) << " in " << pos.to_string();
    if (!pos.face_rays.empty()) {
      os << " spanned by {";
      for (std::size_t i = 0; i < pos.face_rays.size(); ++i)
        os << (i ? "," : "") << class_name(surface, pos.face_rays[i]);
      os << '}';
    }
    out.witness = os.str();
    out.source = g;
    out.image = img;
    out.position = std::move(pos);
    return out;
  }
  return out;
}

}  // namespace symrig
