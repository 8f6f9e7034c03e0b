#include "symrig/lie.hpp"

#include <array>
#include <map>
#include <mutex>

#include "symrig/error.hpp"
#include "symrig/sparse_elim.hpp"

namespace symrig {

namespace {

std::size_t tag_index(AlgebraTag tag) { return static_cast<std::size_t>(doubling_level(tag)); }

void check_same(AlgebraTag a, AlgebraTag b) {
  if (a != b) throw Error(ErrorCode::kTagMismatch, std::string(to_string(a)) + " vs " + to_string(b));
}

// Row indices of the nonzero entries of each column.
std::vector<std::vector<std::size_t>> column_support(const ExactMatrix& m) {
  std::vector<std::vector<std::size_t>> s(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (std::size_t r = 0; r < m.rows(); ++r)
      if (!m(r, c).is_zero()) s[c].push_back(r);
  return s;
}

}  // namespace

// ---------------------------------------------------------------------------
// Endomorphism

Endomorphism::Endomorphism(AlgebraTag tag) : tag_(tag), matrix_(jordan_dim(tag), jordan_dim(tag)) {}

Endomorphism::Endomorphism(AlgebraTag tag, ExactMatrix matrix) : tag_(tag), matrix_(std::move(matrix)) {
  const std::size_t d = jordan_dim(tag);
  if (matrix_.rows() != d || matrix_.cols() != d)
    throw Error(ErrorCode::kInvalidArgument, "endomorphism matrix has the wrong size for the algebra");
}

Endomorphism Endomorphism::identity(AlgebraTag tag) { return {tag, ExactMatrix::identity(jordan_dim(tag))}; }

Endomorphism Endomorphism::from_function(AlgebraTag tag,
                                         const std::function<HermitianMatrix(const HermitianMatrix&)>& f) {
  const std::size_t d = jordan_dim(tag);
  ExactMatrix m(d, d);
  for (std::size_t k = 0; k < d; ++k) {
    HermitianMatrix img = f(HermitianMatrix::basis(tag, k));
    check_same(img.tag(), tag);
    ScalarVector c = img.coords();
    for (std::size_t r = 0; r < d; ++r) m(r, k) = c[r];
  }
  return {tag, std::move(m)};
}

HermitianMatrix Endomorphism::operator()(const HermitianMatrix& b) const {
  check_same(tag_, b.tag());
  return HermitianMatrix::from_coords(tag_, matrix_.apply(b.coords()));
}

Endomorphism operator*(const Endomorphism& f, const Endomorphism& g) {
  check_same(f.tag_, g.tag_);
  return {f.tag_, f.matrix_ * g.matrix_};
}

Endomorphism operator+(const Endomorphism& f, const Endomorphism& g) {
  check_same(f.tag_, g.tag_);
  return {f.tag_, f.matrix_ + g.matrix_};
}

Endomorphism operator-(const Endomorphism& f, const Endomorphism& g) {
  check_same(f.tag_, g.tag_);
  return {f.tag_, f.matrix_ - g.matrix_};
}

Endomorphism commutator(const Endomorphism& f, const Endomorphism& g) { return f * g - g * f; }

Endomorphism jordan_multiplication(const HermitianMatrix& a) {
  return Endomorphism::from_function(a.tag(),
                                     [&a](const HermitianMatrix& b) { return ExactScalar(2) * jordan_product(a, b); });
}

Endomorphism mu(const HermitianMatrix& a) {
  if (!trace(a).is_zero()) throw Error(ErrorCode::kNotTraceless, "mu requires tr(A) = 0, got " + trace(a).to_string());
  return jordan_multiplication(a);
}

Endomorphism sigma_endomorphism(AlgebraTag tag, const Permutation& p) {
  return Endomorphism::from_function(tag, [&p](const HermitianMatrix& b) { return sigma_action(p, b); });
}

// ---------------------------------------------------------------------------
// Torus

DiagonalTorusElement::DiagonalTorusElement(ExactScalar l1, ExactScalar l2, ExactScalar l3)
    : l_{std::move(l1), std::move(l2), std::move(l3)} {
  for (const auto& l : l_)
    if (l.is_zero()) throw Error(ErrorCode::kTorusConstraint, "torus entries must be nonzero");
  if (l_[0] * l_[1] * l_[2] != ExactScalar(1))
    throw Error(ErrorCode::kTorusConstraint, "l1 l2 l3 must equal 1");
}

DiagonalTorusElement operator*(const DiagonalTorusElement& s, const DiagonalTorusElement& t) {
  return {s[0] * t[0], s[1] * t[1], s[2] * t[2]};
}

DiagonalTorusElement DiagonalTorusElement::permuted(const Permutation& p) const {
  return {l_[static_cast<std::size_t>(p(0))], l_[static_cast<std::size_t>(p(1))], l_[static_cast<std::size_t>(p(2))]};
}

HermitianMatrix DiagonalTorusElement::as_matrix(AlgebraTag tag) const {
  return HermitianMatrix::diag(tag, l_[0], l_[1], l_[2]);
}

Endomorphism nu(AlgebraTag tag, const DiagonalTorusElement& t) {
  const AlgMatrix3 a = to_matrix(t.as_matrix(tag));
  return Endomorphism::from_function(
      tag, [&a](const HermitianMatrix& b) { return to_hermitian(matmul(matmul(a, to_matrix(b)), a)); });
}

// ---------------------------------------------------------------------------
// Cached forms on the canonical basis

namespace {

// One cache per table kind.
template <int Kind, class Build>
const std::vector<ExactScalar>& cached(AlgebraTag tag, Build build) {
  static std::array<std::once_flag, 4> flags;
  static std::array<std::vector<ExactScalar>, 4> store;
  const std::size_t i = tag_index(tag);
  std::call_once(flags[i], [&] { store[i] = build(tag); });
  return store[i];
}

std::vector<ExactScalar> build_structure_constants(AlgebraTag tag) {
  const std::size_t d = jordan_dim(tag);
  std::vector<ExactScalar> g(d * d * d);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = j; k < d; ++k) {
      ScalarVector c = jordan_product(HermitianMatrix::basis(tag, j), HermitianMatrix::basis(tag, k)).coords();
      for (std::size_t m = 0; m < d; ++m) {
        g[(j * d + k) * d + m] = c[m];
        g[(k * d + j) * d + m] = c[m];
      }
    }
  return g;
}

std::vector<ExactScalar> build_trace_form(AlgebraTag tag) {
  const std::size_t d = jordan_dim(tag);
  const auto& g = jordan_structure_constants(tag);
  std::vector<ExactScalar> q(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      q[i * d + j] = g[(i * d + j) * d + 0] + g[(i * d + j) * d + 1] + g[(i * d + j) * d + 2];
  return q;
}

std::vector<ExactScalar> build_triple_tensor(AlgebraTag tag) {
  const std::size_t d = jordan_dim(tag);
  const auto& q = trace_form(tag);
  std::vector<ExactScalar> t(d * d * d);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = j; k < d; ++k) {
      ScalarVector x = cross(HermitianMatrix::basis(tag, j), HermitianMatrix::basis(tag, k)).coords();
      for (std::size_t i = 0; i < d; ++i) {
        ExactScalar s;
        for (std::size_t c = 0; c < d; ++c)
          if (!x[c].is_zero() && !q[i * d + c].is_zero()) s += q[i * d + c] * x[c];
        t[(i * d + j) * d + k] = s;
        t[(i * d + k) * d + j] = s;
      }
    }
  return t;
}

}  // namespace

const std::vector<ExactScalar>& jordan_structure_constants(AlgebraTag tag) {
  return cached<0>(tag, build_structure_constants);
}

const std::vector<ExactScalar>& trace_form(AlgebraTag tag) { return cached<1>(tag, build_trace_form); }

const std::vector<ExactScalar>& triple_tensor(AlgebraTag tag) { return cached<2>(tag, build_triple_tensor); }

// ---------------------------------------------------------------------------
// Membership tests

bool is_in_sl3(const Endomorphism& phi) {
  const AlgebraTag tag = phi.tag();
  const std::size_t d = jordan_dim(tag);
  const auto& t = triple_tensor(tag);
  const ExactMatrix& m = phi.matrix();
  const auto support = column_support(m);
  auto term = [&](std::size_t i, std::size_t j, std::size_t k) {
    ExactScalar s;
    for (std::size_t a : support[i]) {
      const ExactScalar& tv = t[(a * d + j) * d + k];
      if (!tv.is_zero()) s += m(a, i) * tv;
    }
    return s;
  };
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j)
      for (std::size_t k = j; k < d; ++k)
        if (!(term(i, j, k) + term(j, i, k) + term(k, i, j)).is_zero()) return false;
  return true;
}

bool preserves_determinant(const Endomorphism& g) {
  const AlgebraTag tag = g.tag();
  const std::size_t d = jordan_dim(tag);
  const auto& t = triple_tensor(tag);
  const ExactMatrix& m = g.matrix();
  const auto support = column_support(m);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j)
      for (std::size_t k = j; k < d; ++k) {
        ExactScalar s;
        for (std::size_t a : support[i])
          for (std::size_t b : support[j])
            for (std::size_t c : support[k]) {
              const ExactScalar& tv = t[(a * d + b) * d + c];
              if (!tv.is_zero()) s += m(a, i) * m(b, j) * m(c, k) * tv;
            }
        if (s != t[(i * d + j) * d + k]) return false;
      }
  return true;
}

bool preserves_trace_form(const Endomorphism& g) {
  const AlgebraTag tag = g.tag();
  const std::size_t d = jordan_dim(tag);
  const auto& q = trace_form(tag);
  const ExactMatrix& m = g.matrix();
  const auto support = column_support(m);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      ExactScalar s;
      for (std::size_t a : support[i])
        for (std::size_t b : support[j])
          if (!q[a * d + b].is_zero()) s += m(a, i) * m(b, j) * q[a * d + b];
      if (s != q[i * d + j]) return false;
    }
  return true;
}

bool is_derivation(const Endomorphism& psi) {
  const AlgebraTag tag = psi.tag();
  const std::size_t d = jordan_dim(tag);
  const auto& g = jordan_structure_constants(tag);
  const ExactMatrix& m = psi.matrix();
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = j; k < d; ++k) {
      // psi(B_j o B_k) - psi(B_j) o B_k - B_j o psi(B_k), coordinate c.
      for (std::size_t c = 0; c < d; ++c) {
        ExactScalar s;
        for (std::size_t b = 0; b < d; ++b) {
          const ExactScalar& gv = g[(j * d + k) * d + b];
          if (!gv.is_zero() && !m(c, b).is_zero()) s += gv * m(c, b);
        }
        for (std::size_t a = 0; a < d; ++a) {
          if (!m(a, j).is_zero() && !g[(a * d + k) * d + c].is_zero()) s -= m(a, j) * g[(a * d + k) * d + c];
          if (!m(a, k).is_zero() && !g[(j * d + a) * d + c].is_zero()) s -= m(a, k) * g[(j * d + a) * d + c];
        }
        if (!s.is_zero()) return false;
      }
    }
  return true;
}

// ---------------------------------------------------------------------------
// Derivation algebra

namespace {

constexpr std::uint64_t kPrime1 = 2305843009213693951ULL;  // 2^61 - 1
constexpr std::uint64_t kPrime2 = 4611686018427387847ULL;  // 2^62 - 57

// Calls emit(row) for every equation of the derivation system; the row maps
// unknown index (a * d + b, the a-th coordinate of psi(B_b)) to a coefficient.
template <class Emit>
void derivation_equations(AlgebraTag tag, Emit emit) {
  const std::size_t d = jordan_dim(tag);
  const auto& g = jordan_structure_constants(tag);
  // The structure constants are real rationals.
  auto coef = [&](std::size_t idx) -> const Rational& { return g[idx].re(); };
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = j; k < d; ++k)
      for (std::size_t c = 0; c < d; ++c) {
        std::map<std::uint32_t, Rational> row;
        auto add = [&](std::size_t var, const Rational& v) {
          Rational& slot = row[static_cast<std::uint32_t>(var)];
          slot += v;
        };
        for (std::size_t b = 0; b < d; ++b)
          if (sgn(coef((j * d + k) * d + b)) != 0) add(c * d + b, coef((j * d + k) * d + b));
        for (std::size_t a = 0; a < d; ++a) {
          if (sgn(coef((a * d + k) * d + c)) != 0) add(a * d + j, -coef((a * d + k) * d + c));
          if (sgn(coef((j * d + a) * d + c)) != 0) add(a * d + k, -coef((j * d + a) * d + c));
        }
        emit(row);
      }
}

template <class Field>
void feed(StreamingEliminator<Field>& elim, const std::map<std::uint32_t, Rational>& row) {
  typename StreamingEliminator<Field>::SparseRow sparse;
  for (const auto& [col, v] : row)
    if (sgn(v) != 0) sparse.emplace_back(col, elim.field().from_rational(v));
  if (!sparse.empty()) elim.add_row(std::move(sparse));
}

}  // namespace

DerivationResult derivation_algebra(AlgebraTag tag, EliminationMode mode, bool want_basis,
                                    const std::function<void(std::size_t, std::size_t)>& progress) {
  const std::size_t d = jordan_dim(tag);
  DerivationResult out;
  out.unknowns = d * d;
  if (mode == EliminationMode::kExact) {
    StreamingEliminator<GaussianRationalField> elim(d * d);
    derivation_equations(tag, [&](const auto& row) {
      feed(elim, row);
      ++out.equations;
      if (progress && out.equations % 1000 == 0) progress(out.equations, elim.rank());
    });
    out.rank = elim.rank();
    if (want_basis) {
      for (const auto& v : elim.kernel()) {
        ExactMatrix m(d, d);
        for (std::size_t a = 0; a < d; ++a)
          for (std::size_t b = 0; b < d; ++b) m(a, b) = v[a * d + b];
        out.basis.emplace_back(tag, std::move(m));
      }
    }
  } else {
    StreamingEliminator<PrimeField> e1(d * d, PrimeField(kPrime1));
    StreamingEliminator<PrimeField> e2(d * d, PrimeField(kPrime2));
    derivation_equations(tag, [&](const auto& row) {
      feed(e1, row);
      feed(e2, row);
      ++out.equations;
      if (progress && out.equations % 1000 == 0) progress(out.equations, e1.rank());
    });
    if (e1.rank() != e2.rank())
      throw Error(ErrorCode::kInternal, "modular ranks disagree: " + std::to_string(e1.rank()) + " vs " +
                                            std::to_string(e2.rank()));
    out.rank = e1.rank();
  }
  out.dimension = out.unknowns - out.rank;
  return out;
}

std::size_t derivation_algebra_dim(AlgebraTag tag, EliminationMode mode) {
  return derivation_algebra(tag, mode).dimension;
}

// ---------------------------------------------------------------------------
// Centralizer of h0 inside J3(A)_0

CentralizerResult centralizer_in_J0(AlgebraTag tag) {
  const std::size_t d = jordan_dim(tag);
  std::vector<Endomorphism> mult;
  mult.reserve(d);
  for (std::size_t m = 0; m < d; ++m) mult.push_back(jordan_multiplication(HermitianMatrix::basis(tag, m)));

  const std::array<HermitianMatrix, 2> h0 = {HermitianMatrix::diag(tag, 1, -1, 0),
                                             HermitianMatrix::diag(tag, 0, 1, -1)};
  ExactMatrix system(2 * d * d + 1, d);
  for (std::size_t i = 0; i < 3; ++i) system(0, i) = 1;  // trace
  std::size_t row = 1;
  for (const auto& h : h0) {
    const Endomorphism mh = mu(h);
    std::vector<ExactMatrix> comms;
    for (std::size_t m = 0; m < d; ++m) comms.push_back(commutator(mult[m], mh).matrix());
    for (std::size_t c = 0; c < d; ++c)
      for (std::size_t k = 0; k < d; ++k, ++row)
        for (std::size_t m = 0; m < d; ++m) system(row, m) = comms[m](c, k);
  }
  RankKernel rk = rank_and_kernel(system);
  CentralizerResult out;
  out.dimension = rk.kernel.size();
  for (const auto& v : rk.kernel) out.basis.push_back(HermitianMatrix::from_coords(tag, v));
  return out;
}

std::size_t centralizer_dim_in_J0(AlgebraTag tag) { return centralizer_in_J0(tag).dimension; }

// ---------------------------------------------------------------------------
// Phi

ProjectivePoint::ProjectivePoint(ScalarVector coords) : coords_(std::move(coords)) {
  bool all_zero = true;
  for (const auto& c : coords_) all_zero = all_zero && c.is_zero();
  if (all_zero) throw Error(ErrorCode::kZeroInput, "projective point with all coordinates zero");
}

bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) {
  if (a.coords_.size() != b.coords_.size()) return false;
  std::size_t i = 0;
  while (a.coords_[i].is_zero()) ++i;
  if (b.coords_[i].is_zero()) return false;
  const ExactScalar& sa = a.coords_[i];
  const ExactScalar& sb = b.coords_[i];
  for (std::size_t k = 0; k < a.coords_.size(); ++k)
    if (a.coords_[k] * sb != b.coords_[k] * sa) return false;
  return true;
}

ProjectivePoint ProjectivePoint::normalized() const {
  std::size_t i = 0;
  while (coords_[i].is_zero()) ++i;
  const ExactScalar inv = coords_[i].inverse();
  ScalarVector c = coords_;
  for (auto& x : c) x *= inv;
  return ProjectivePoint(std::move(c));
}

ProjectivePoint phi_map(const ExactScalar& t, const HermitianMatrix& a) {
  if (t.is_zero() && a.is_zero()) throw Error(ErrorCode::kZeroInput, "phi_map(0, 0) is undefined");
  ScalarVector c;
  const ExactScalar t2 = t * t;
  c.push_back(t2 * t);
  for (const auto& v : a.coords()) c.push_back(t2 * v);
  for (const auto& v : comatrix(a).coords()) c.push_back(t * v);
  c.push_back(determinant(a));
  // Phi is undefined where every coordinate vanishes (t = 0 and A of rank one).
  bool all_zero = true;
  for (const auto& v : c) all_zero = all_zero && v.is_zero();
  if (all_zero) throw Error(ErrorCode::kZeroInput, "phi_map is undefined at this point");
  return ProjectivePoint(std::move(c));
}

bool on_cubic(const ExactScalar& t, const HermitianMatrix& a) { return t * t * t == determinant(a); }

}  // namespace symrig
