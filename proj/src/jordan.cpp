#include "symrig/jordan.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

#include "symrig/error.hpp"

namespace symrig {

namespace {

const Rational kHalf(1, 2);

void check_same(const HermitianMatrix& a, const HermitianMatrix& b) {
  if (a.tag() != b.tag())
    throw Error(ErrorCode::kTagMismatch, std::string(to_string(a.tag())) + " vs " + to_string(b.tag()));
}

}  // namespace

HermitianMatrix::HermitianMatrix(AlgebraTag tag)
    : tag_(tag), x_{AlgElement(tag), AlgElement(tag), AlgElement(tag)} {}

HermitianMatrix::HermitianMatrix(AlgebraTag tag, std::array<ExactScalar, 3> r, std::array<AlgElement, 3> x)
    : tag_(tag), r_(std::move(r)), x_(std::move(x)) {
  for (const auto& xi : x_)
    if (xi.tag() != tag_) throw Error(ErrorCode::kTagMismatch, "off-diagonal entry has the wrong algebra");
}

HermitianMatrix HermitianMatrix::identity(AlgebraTag tag) { return diag(tag, 1, 1, 1); }

HermitianMatrix HermitianMatrix::diag(AlgebraTag tag, const ExactScalar& r1, const ExactScalar& r2,
                                      const ExactScalar& r3) {
  HermitianMatrix m(tag);
  m.r_ = {r1, r2, r3};
  return m;
}

HermitianMatrix HermitianMatrix::basis(AlgebraTag tag, std::size_t k) {
  ScalarVector c(jordan_dim(tag));
  c.at(k) = 1;
  return from_coords(tag, c);
}

HermitianMatrix HermitianMatrix::from_coords(AlgebraTag tag, const ScalarVector& coords) {
  const std::size_t n = dim(tag);
  if (coords.size() != 3 + 3 * n) throw Error(ErrorCode::kInvalidArgument, "coordinate vector has wrong length");
  HermitianMatrix m(tag);
  for (std::size_t i = 0; i < 3; ++i) m.r_[i] = coords[i];
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t k = 0; k < n; ++k) m.x_[i][k] = coords[3 + i * n + k];
  return m;
}

HermitianMatrix HermitianMatrix::random(AlgebraTag tag, ScalarSampler& sampler) {
  HermitianMatrix m(tag);
  for (auto& r : m.r_) r = sampler.scalar();
  for (auto& x : m.x_) x = AlgElement::random(tag, sampler);
  return m;
}

HermitianMatrix HermitianMatrix::random_traceless(AlgebraTag tag, ScalarSampler& sampler) {
  HermitianMatrix m = random(tag, sampler);
  m.r_[2] = -(m.r_[0] + m.r_[1]);
  return m;
}

ScalarVector HermitianMatrix::coords() const {
  const std::size_t n = dim(tag_);
  ScalarVector c(3 + 3 * n);
  for (std::size_t i = 0; i < 3; ++i) c[i] = r_[i];
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t k = 0; k < n; ++k) c[3 + i * n + k] = x_[i][k];
  return c;
}

bool HermitianMatrix::is_zero() const {
  return std::all_of(r_.begin(), r_.end(), [](const ExactScalar& s) { return s.is_zero(); }) &&
         std::all_of(x_.begin(), x_.end(), [](const AlgElement& x) { return x.is_zero(); });
}

HermitianMatrix& HermitianMatrix::operator+=(const HermitianMatrix& o) {
  check_same(*this, o);
  for (std::size_t i = 0; i < 3; ++i) {
    r_[i] += o.r_[i];
    x_[i] += o.x_[i];
  }
  return *this;
}

HermitianMatrix& HermitianMatrix::operator-=(const HermitianMatrix& o) {
  check_same(*this, o);
  for (std::size_t i = 0; i < 3; ++i) {
    r_[i] -= o.r_[i];
    x_[i] -= o.x_[i];
  }
  return *this;
}

HermitianMatrix& HermitianMatrix::operator*=(const ExactScalar& s) {
  for (std::size_t i = 0; i < 3; ++i) {
    r_[i] *= s;
    x_[i] *= s;
  }
  return *this;
}

std::string HermitianMatrix::to_string() const {
  std::ostringstream os;
  os << "J3(" << symrig::to_string(tag_) << "){r=[" << r_[0] << ", " << r_[1] << ", " << r_[2] << "], x1="
     << x_[0].to_string() << ", x2=" << x_[1].to_string() << ", x3=" << x_[2].to_string() << '}';
  return os.str();
}

// ---------------------------------------------------------------------------

AlgMatrix3 to_matrix(const HermitianMatrix& a) {
  const AlgebraTag t = a.tag();
  AlgMatrix3 m{t, {}};
  m(0, 0) = AlgElement::scalar(t, a.r(0));
  m(1, 1) = AlgElement::scalar(t, a.r(1));
  m(2, 2) = AlgElement::scalar(t, a.r(2));
  m(1, 0) = a.x(2);
  m(0, 1) = conjugate(a.x(2));
  m(2, 0) = a.x(1);
  m(0, 2) = conjugate(a.x(1));
  m(2, 1) = a.x(0);
  m(1, 2) = conjugate(a.x(0));
  return m;
}

HermitianMatrix to_hermitian(const AlgMatrix3& m) {
  for (std::size_t i = 0; i < 3; ++i)
    if (!m(i, i).is_scalar())
      throw Error(ErrorCode::kHermiticityBroken, "diagonal entry " + std::to_string(i) + " is not a scalar");
  const std::array<std::pair<std::size_t, std::size_t>, 3> lower = {{{2, 1}, {2, 0}, {1, 0}}};
  for (const auto& [i, j] : lower)
    if (m(j, i) != conjugate(m(i, j)))
      throw Error(ErrorCode::kHermiticityBroken, "entries are not conjugate-symmetric");
  return HermitianMatrix(m.tag, {m(0, 0).scalar_part(), m(1, 1).scalar_part(), m(2, 2).scalar_part()},
                         {m(2, 1), m(2, 0), m(1, 0)});
}

AlgMatrix3 matmul(const AlgMatrix3& a, const AlgMatrix3& b) {
  if (a.tag != b.tag) throw Error(ErrorCode::kTagMismatch, "matmul");
  AlgMatrix3 out{a.tag, {}};
  for (auto& e : out.e) e = AlgElement(a.tag);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) out(i, j) += a(i, k) * b(k, j);
  return out;
}

HermitianMatrix jordan_product(const HermitianMatrix& a, const HermitianMatrix& b) {
  check_same(a, b);
  const AlgMatrix3 ma = to_matrix(a), mb = to_matrix(b);
  // Only the lower triangle of AB + BA is computed; the rest is its conjugate.
  AlgMatrix3 out{a.tag(), {}};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      AlgElement e(a.tag());
      for (std::size_t k = 0; k < 3; ++k) {
        e += ma(i, k) * mb(k, j);
        e += mb(i, k) * ma(k, j);
      }
      e *= ExactScalar(kHalf);
      out(j, i) = conjugate(e);
      out(i, j) = std::move(e);
    }
  return to_hermitian(out);
}

ExactScalar trace(const HermitianMatrix& a) { return a.r(0) + a.r(1) + a.r(2); }

ExactScalar trace_sq(const HermitianMatrix& a) {
  ExactScalar s;
  for (std::size_t i = 0; i < 3; ++i) s += a.r(i) * a.r(i) + ExactScalar(2) * norm(a.x(i));
  return s;
}

namespace {

// x1 x3 x2b + x2b x1 x3 + x3 x2b x1 + x2 x3b x1b + x3b x1b x2 + x1b x2 x3b,
// products nested from the left, unit component only.
ExactScalar cyclic_triple_sum(const HermitianMatrix& a) {
  const AlgElement& x1 = a.x(0);
  const AlgElement& x2 = a.x(1);
  const AlgElement& x3 = a.x(2);
  AlgElement x1b = conjugate(x1), x2b = conjugate(x2), x3b = conjugate(x3);
  AlgElement s = (x1 * x3) * x2b;
  s += (x2b * x1) * x3;
  s += (x3 * x2b) * x1;
  s += (x2 * x3b) * x1b;
  s += (x3b * x1b) * x2;
  s += (x1b * x2) * x3b;
  return s.scalar_part();
}

}  // namespace

ExactScalar trace_cube(const HermitianMatrix& a) {
  ExactScalar s;
  for (std::size_t i = 0; i < 3; ++i) {
    s += a.r(i) * a.r(i) * a.r(i);
    for (std::size_t j = 0; j < 3; ++j)
      if (j != i) s += ExactScalar(3) * a.r(i) * norm(a.x(j));
  }
  return s + cyclic_triple_sum(a);
}

HermitianMatrix comatrix(const HermitianMatrix& a) {
  const ExactScalar t = trace(a);
  HermitianMatrix out = jordan_product(a, a);
  out -= t * a;
  out += ExactScalar(kHalf) * (t * t - trace_sq(a)) * HermitianMatrix::identity(a.tag());
  return out;
}

ExactScalar determinant(const HermitianMatrix& a) {
  ExactScalar d = a.r(0) * a.r(1) * a.r(2);
  for (std::size_t i = 0; i < 3; ++i) d -= a.r(i) * norm(a.x(i));
  return d + ExactScalar(Rational(1, 3)) * cyclic_triple_sum(a);
}

ExactScalar determinant_via_traces(const HermitianMatrix& a) {
  HermitianMatrix sq = jordan_product(a, a);
  HermitianMatrix cube = jordan_product(a, sq);
  const ExactScalar t = trace(a);
  return ExactScalar(Rational(1, 3)) * trace(cube) - ExactScalar(kHalf) * t * trace(sq) +
         ExactScalar(Rational(1, 6)) * t * t * t;
}

HermitianMatrix cross(const HermitianMatrix& a, const HermitianMatrix& b) {
  check_same(a, b);
  const HermitianMatrix ab = jordan_product(a, b);
  const ExactScalar ta = trace(a), tb = trace(b);
  HermitianMatrix out = ExactScalar(2) * ab;
  out -= ta * b;
  out -= tb * a;
  out += (ta * tb - trace(ab)) * HermitianMatrix::identity(a.tag());
  return ExactScalar(kHalf) * out;
}

ExactScalar triple(const HermitianMatrix& a, const HermitianMatrix& b, const HermitianMatrix& c) {
  return trace(jordan_product(a, cross(b, c)));
}

// ---------------------------------------------------------------------------

Permutation Permutation::transposition(int a, int b) {
  Permutation p;
  std::swap(p.image[static_cast<std::size_t>(a)], p.image[static_cast<std::size_t>(b)]);
  return p;
}

std::vector<Permutation> Permutation::all() {
  std::vector<Permutation> out;
  std::array<int, 3> img{0, 1, 2};
  do out.push_back(Permutation{img});
  while (std::next_permutation(img.begin(), img.end()));
  return out;
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  Permutation r;
  for (int i = 0; i < 3; ++i) r.image[static_cast<std::size_t>(i)] = p(q(i));
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r;
  for (int i = 0; i < 3; ++i) r.image[static_cast<std::size_t>(image[static_cast<std::size_t>(i)])] = i;
  return r;
}

std::string Permutation::to_string() const {
  return "[" + std::to_string(image[0] + 1) + std::to_string(image[1] + 1) + std::to_string(image[2] + 1) + "]";
}

AlgMatrix3 transposition_matrix(AlgebraTag tag, int a) {
  const Permutation t = Permutation::transposition(a, a + 1);
  AlgMatrix3 m{tag, {}};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      m(i, j) = AlgElement::scalar(tag, t(static_cast<int>(i)) == static_cast<int>(j) ? 1 : 0);
  return m;
}

std::vector<int> generator_word(const Permutation& p) {
  // Breadth-first search over words in (0 1), (1 2).
  std::map<std::array<int, 3>, std::vector<int>> seen{{Permutation::identity().image, {}}};
  std::deque<Permutation> queue{Permutation::identity()};
  while (!queue.empty()) {
    Permutation cur = queue.front();
    queue.pop_front();
    if (cur == p) return seen[cur.image];
    for (int g = 0; g < 2; ++g) {
      Permutation next = cur * Permutation::transposition(g, g + 1);
      if (seen.count(next.image)) continue;
      auto word = seen[cur.image];
      word.push_back(g);
      seen[next.image] = word;
      queue.push_back(next);
    }
  }
  throw Error(ErrorCode::kInternal, "permutation not reached");
}

HermitianMatrix sigma_action(const Permutation& p, const HermitianMatrix& a) {
  AlgMatrix3 m = to_matrix(a);
  for (int g : generator_word(p)) {
    const AlgMatrix3 t = transposition_matrix(a.tag(), g);
    m = matmul(matmul(t, m), t);
  }
  return to_hermitian(m);
}

}  // namespace symrig
