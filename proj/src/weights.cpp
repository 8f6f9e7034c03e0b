#include "symrig/weights.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <set>
#include <sstream>

#include "symrig/error.hpp"
#include "symrig/jordan.hpp"

namespace symrig {

const char* to_string(RootType t) {
  switch (t) {
    case RootType::A1: return "A1";
    case RootType::A2: return "A2";
    case RootType::C3: return "C3";
    case RootType::F4: return "F4";
  }
  return "?";
}

namespace {

RationalVector vec(std::initializer_list<Rational> xs) { return RationalVector(xs); }

std::vector<RationalVector> scaled_identity(std::size_t n, const Rational& s) {
  std::vector<RationalVector> g(n, RationalVector(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) g[i][i] = s;
  return g;
}

RationalVector add(RationalVector a, const RationalVector& b, const Rational& s = 1) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += s * b[i];
  return a;
}

// Solves M x = b for square invertible M (tiny sizes only).
RationalVector solve_square(std::vector<RationalVector> m, RationalVector b) {
  const std::size_t n = m.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(m[p][c]) == 0) ++p;
    if (p == n) throw Error(ErrorCode::kInternal, "singular system in root-system helper");
    std::swap(m[p], m[c]);
    std::swap(b[p], b[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || sgn(m[r][c]) == 0) continue;
      const Rational f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
      b[r] -= f * b[c];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= m[i][i];
  return b;
}

bool is_integral(const Rational& q) { return q.get_den() == 1; }

}  // namespace

RootSystem RootSystem::make(RootType type) {
  RootSystem rs;
  rs.type = type;
  const Rational h(1, 2);
  switch (type) {
    case RootType::A1:
      rs.simple_roots = {vec({1, -1})};
      rs.form = scaled_identity(2, 1);
      break;
    case RootType::A2:
      rs.simple_roots = {vec({1, -1, 0}), vec({0, 1, -1})};
      rs.form = scaled_identity(3, 1);
      break;
    case RootType::C3:
      rs.simple_roots = {vec({1, -1, 0}), vec({0, 1, -1}), vec({0, 0, 2})};
      rs.form = scaled_identity(3, h);
      break;
    case RootType::F4:
      rs.simple_roots = {vec({0, 1, -1, 0}), vec({0, 0, 1, -1}), vec({0, 0, 0, 1}), vec({h, -h, -h, -h})};
      rs.form = scaled_identity(4, 1);
      break;
  }
  rs.rank = rs.simple_roots.size();
  return rs;
}

Rational RootSystem::inner(const RationalVector& a, const RationalVector& b) const {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      if (sgn(form[i][j]) != 0) s += a[i] * form[i][j] * b[j];
  return s;
}

std::vector<std::vector<long>> RootSystem::cartan_matrix() const {
  std::vector<std::vector<long>> a(rank, std::vector<long>(rank));
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = 0; j < rank; ++j) {
      Rational v = 2 * inner(simple_roots[i], simple_roots[j]) / inner(simple_roots[j], simple_roots[j]);
      if (!is_integral(v)) throw Error(ErrorCode::kInternal, "non-integral Cartan entry");
      a[i][j] = v.get_num().get_si();
    }
  return a;
}

std::vector<std::vector<long>> standard_cartan_matrix(RootType type) {
  switch (type) {
    case RootType::A1: return {{2}};
    case RootType::A2: return {{2, -1}, {-1, 2}};
    case RootType::C3: return {{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}};
    case RootType::F4: return {{2, -1, 0, 0}, {-1, 2, -2, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}};
  }
  return {};
}

bool Weight::is_zero() const {
  return std::all_of(labels.begin(), labels.end(), [](long x) { return x == 0; });
}

bool Weight::is_dominant() const {
  return std::all_of(labels.begin(), labels.end(), [](long x) { return x >= 0; });
}

std::string Weight::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < labels.size(); ++i) os << (i ? "," : "") << labels[i];
  os << ')';
  return os.str();
}

RationalVector simple_root_coordinates(const RootSystem& rs, const RationalVector& v) {
  // Gram system <a_i, a_j> c_j = <a_i, v>.
  std::vector<RationalVector> g(rs.rank, RationalVector(rs.rank));
  RationalVector b(rs.rank);
  for (std::size_t i = 0; i < rs.rank; ++i) {
    for (std::size_t j = 0; j < rs.rank; ++j) g[i][j] = rs.inner(rs.simple_roots[i], rs.simple_roots[j]);
    b[i] = rs.inner(rs.simple_roots[i], v);
  }
  return solve_square(std::move(g), std::move(b));
}

namespace {

std::vector<RationalVector> compute_positive_roots(const RootSystem& rs) {
  // Every root is Weyl-conjugate to a simple root, so closing the simple roots
  // under simple reflections yields the whole root system.
  std::set<RationalVector> seen(rs.simple_roots.begin(), rs.simple_roots.end());
  std::deque<RationalVector> queue(rs.simple_roots.begin(), rs.simple_roots.end());
  while (!queue.empty()) {
    RationalVector r = queue.front();
    queue.pop_front();
    for (const auto& a : rs.simple_roots) {
      RationalVector s = add(r, a, -2 * rs.inner(r, a) / rs.inner(a, a));
      if (seen.insert(s).second) queue.push_back(s);
    }
  }
  std::vector<std::pair<Rational, RationalVector>> pos;
  for (const auto& r : seen) {
    RationalVector c = simple_root_coordinates(rs, r);
    if (std::all_of(c.begin(), c.end(), [](const Rational& x) { return sgn(x) >= 0; })) {
      Rational height = 0;
      for (const auto& x : c) height += x;
      pos.emplace_back(height, r);
    }
  }
  std::sort(pos.begin(), pos.end());
  std::vector<RationalVector> out;
  for (auto& p : pos) out.push_back(std::move(p.second));
  return out;
}

std::vector<RationalVector> compute_fundamental_weights(const RootSystem& rs) {
  // omega_i is the vector in span(simple roots) with 2<omega_i, a_j>/<a_j, a_j> = delta_ij.
  std::vector<RationalVector> out;
  for (std::size_t i = 0; i < rs.rank; ++i) {
    std::vector<RationalVector> g(rs.rank, RationalVector(rs.rank));
    RationalVector b(rs.rank, Rational(0));
    for (std::size_t j = 0; j < rs.rank; ++j)
      for (std::size_t k = 0; k < rs.rank; ++k) g[j][k] = rs.inner(rs.simple_roots[j], rs.simple_roots[k]);
    b[i] = rs.inner(rs.simple_roots[i], rs.simple_roots[i]) / 2;
    RationalVector c = solve_square(std::move(g), std::move(b));
    RationalVector w(rs.simple_roots[0].size(), Rational(0));
    for (std::size_t k = 0; k < rs.rank; ++k) w = add(w, rs.simple_roots[k], c[k]);
    out.push_back(std::move(w));
  }
  return out;
}

struct Derived {
  std::vector<RationalVector> positive;
  std::vector<RationalVector> omega;
};

const Derived& derived(const RootSystem& rs) {
  static std::mutex mu;
  static std::map<std::pair<std::vector<RationalVector>, std::vector<RationalVector>>, Derived> memo;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(rs.simple_roots, rs.form);
  auto it = memo.find(key);
  if (it == memo.end()) it = memo.emplace(key, Derived{compute_positive_roots(rs), compute_fundamental_weights(rs)}).first;
  return it->second;
}

}  // namespace

std::vector<RationalVector> positive_roots(const RootSystem& rs) { return derived(rs).positive; }

RationalVector to_ambient(const RootSystem& rs, const Weight& w) {
  const auto& omega = derived(rs).omega;
  RationalVector out(rs.simple_roots[0].size(), Rational(0));
  for (std::size_t k = 0; k < rs.rank; ++k)
    if (w.labels[k] != 0) out = add(out, omega[k], Rational(w.labels[k]));
  return out;
}

namespace {

void require_dominant(const Weight& w) {
  if (!w.is_dominant()) throw Error(ErrorCode::kNotDominant, "weight " + w.to_string() + " is not dominant");
}

RationalVector rho(const RootSystem& rs) {
  return to_ambient(rs, Weight{std::vector<long>(rs.rank, 1)});
}

}  // namespace

Integer weyl_dim(const RootSystem& rs, const Weight& lambda) {
  require_dominant(lambda);
  const RationalVector r = rho(rs);
  const RationalVector lr = add(to_ambient(rs, lambda), r);
  Rational prod = 1;
  for (const auto& a : derived(rs).positive) prod *= rs.inner(lr, a) / rs.inner(r, a);
  if (!is_integral(prod)) throw Error(ErrorCode::kInternal, "non-integral Weyl dimension");
  return prod.get_num();
}

bool in_root_lattice(const RootSystem& rs, const Weight& w) {
  RationalVector c = simple_root_coordinates(rs, to_ambient(rs, w));
  return std::all_of(c.begin(), c.end(), is_integral);
}

Weight reflect(const RootSystem& rs, const Weight& w, std::size_t i) {
  const auto a = rs.cartan_matrix();
  Weight out = w;
  for (std::size_t j = 0; j < rs.rank; ++j) out.labels[j] -= w.labels[i] * a[i][j];
  return out;
}

Weight dominant_conjugate(const RootSystem& rs, const Weight& w) {
  Weight cur = w;
  for (;;) {
    std::size_t i = 0;
    while (i < rs.rank && cur.labels[i] >= 0) ++i;
    if (i == rs.rank) return cur;
    cur = reflect(rs, cur, i);
  }
}

JordanModule select_module(AlgebraTag tag) {
  RootType type = RootType::A1;
  switch (tag) {
    case AlgebraTag::C: type = RootType::A1; break;
    case AlgebraTag::CxC: type = RootType::A2; break;
    case AlgebraTag::HC: type = RootType::C3; break;
    case AlgebraTag::OC: type = RootType::F4; break;
  }
  const RootSystem rs = RootSystem::make(type);
  const Integer target = static_cast<long>(jordan_dim(tag) - 1);
  std::vector<Weight> hits;
  Weight w{std::vector<long>(rs.rank, 0)};
  // Odometer over labels 0..4.
  for (;;) {
    std::size_t i = 0;
    while (i < rs.rank && w.labels[i] == 4) w.labels[i++] = 0;
    if (i == rs.rank) break;
    ++w.labels[i];
    if (in_root_lattice(rs, w) && weyl_dim(rs, w) == target) hits.push_back(w);
  }
  if (hits.size() != 1)
    throw Error(ErrorCode::kAmbiguous, std::to_string(hits.size()) + " candidate weights of dimension " +
                                           target.get_str() + " for " + to_string(type));
  return {rs, hits.front()};
}

WeightDiagram freudenthal_multiplicities(const RootSystem& rs, const Weight& lambda) {
  require_dominant(lambda);
  const auto cartan = rs.cartan_matrix();
  const std::size_t n = rs.rank;

  // Positive roots in Dynkin coordinates, with simple-root coordinates kept for levels.
  struct Root {
    Weight labels;
    RationalVector ambient;
  };
  std::vector<Root> roots;
  for (const auto& a : positive_roots(rs)) {
    RationalVector c = simple_root_coordinates(rs, a);
    Weight l{std::vector<long>(n, 0)};
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) l.labels[j] += c[i].get_num().get_si() * cartan[i][j];
    roots.push_back({l, a});
  }

  // lambda - weight expressed in simple roots; a candidate must have a dominant
  // conjugate below lambda.
  auto below_lambda = [&](const Weight& mu) {
    Weight diff{std::vector<long>(n)};
    for (std::size_t i = 0; i < n; ++i) diff.labels[i] = lambda.labels[i] - mu.labels[i];
    RationalVector c = simple_root_coordinates(rs, to_ambient(rs, diff));
    return std::all_of(c.begin(), c.end(), [](const Rational& x) { return is_integral(x) && sgn(x) >= 0; });
  };

  const RationalVector r = rho(rs);
  auto norm_plus_rho = [&](const Weight& mu) {
    RationalVector v = add(to_ambient(rs, mu), r);
    return rs.inner(v, v);
  };
  const Rational top = norm_plus_rho(lambda);

  WeightDiagram diagram;
  diagram[lambda] = 1;
  std::vector<Weight> level{lambda};
  while (!level.empty()) {
    std::set<Weight> next;
    for (const auto& mu : level)
      for (std::size_t i = 0; i < n; ++i) {
        Weight nu = mu;
        for (std::size_t j = 0; j < n; ++j) nu.labels[j] -= cartan[i][j];
        if (below_lambda(dominant_conjugate(rs, nu))) next.insert(nu);
      }
    level.clear();
    for (const auto& mu : next) {
      Rational sum = 0;
      for (const auto& root : roots) {
        Weight up = mu;
        for (;;) {
          for (std::size_t j = 0; j < n; ++j) up.labels[j] += root.labels.labels[j];
          auto it = diagram.find(up);
          if (it == diagram.end()) break;
          sum += Rational(it->second) * rs.inner(to_ambient(rs, up), root.ambient);
        }
      }
      const Rational denom = top - norm_plus_rho(mu);
      if (sgn(denom) == 0) throw Error(ErrorCode::kInternal, "zero Freudenthal denominator at " + mu.to_string());
      const Rational m = 2 * sum / denom;
      if (!is_integral(m)) throw Error(ErrorCode::kInternal, "non-integral multiplicity at " + mu.to_string());
      if (sgn(m) > 0) {
        diagram[mu] = m.get_num().get_si();
        level.push_back(mu);
      }
    }
  }
  return diagram;
}

long multiplicity(const WeightDiagram& d, const Weight& w) {
  auto it = d.find(w);
  return it == d.end() ? 0 : it->second;
}

long diagram_dimension(const WeightDiagram& d) {
  long s = 0;
  for (const auto& [w, m] : d) s += m;
  return s;
}

}  // namespace symrig
