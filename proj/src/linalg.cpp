#include "symrig/linalg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace symrig {

// ---------------------------------------------------------------------------
// ExactMatrix / IntMatrix basics

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<ScalarVector>& rows) {
  if (rows.empty()) return {};
  ExactMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols()) throw std::invalid_argument("ExactMatrix: ragged rows");
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

ScalarVector ExactMatrix::column(std::size_t c) const {
  ScalarVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

ScalarVector ExactMatrix::apply(const ScalarVector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("ExactMatrix::apply: size mismatch");
  ScalarVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      const ExactScalar& a = (*this)(r, c);
      if (a.is_zero() || v[c].is_zero()) continue;
      out[r] += a * v[c];
    }
  }
  return out;
}

bool ExactMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const ExactScalar& s) { return s.is_zero(); });
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("ExactMatrix: product size mismatch");
  ExactMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const ExactScalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (b(k, j).is_zero()) continue;
        out(i, j) += x * b(k, j);
      }
    }
  }
  return out;
}

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("ExactMatrix: sum size mismatch");
  ExactMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("ExactMatrix: difference size mismatch");
  ExactMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
  return out;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  if (rows.empty()) return {};
  IntMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols()) throw std::invalid_argument("IntMatrix: ragged rows");
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("IntMatrix: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntVector IntMatrix::row(std::size_t r) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntVector IntMatrix::column(std::size_t c) const {
  IntVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

IntVector IntMatrix::apply(const IntVector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("IntMatrix::apply: size mismatch");
  IntVector out(rows_, Integer(0));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r] += (*this)(r, c) * v[c];
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("IntMatrix: product size mismatch");
  IntMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k)
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
  return out;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("IntMatrix: difference size mismatch");
  IntMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
  return out;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ",[" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? "," : "") << (*this)(r, c).get_str();
    os << ']';
  }
  os << ']';
  return os.str();
}

// ---------------------------------------------------------------------------
// Fraction-free elimination over Z[i]

namespace {

struct GaussInt {
  Integer re{0};
  Integer im{0};

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
};

GaussInt mul(const GaussInt& a, const GaussInt& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

GaussInt sub(const GaussInt& a, const GaussInt& b) { return {a.re - b.re, a.im - b.im}; }

// Exact quotient a / b in Z[i]; Bareiss guarantees divisibility.
GaussInt divexact(const GaussInt& a, const GaussInt& b) {
  Integer n = b.re * b.re + b.im * b.im;
  Integer re = a.re * b.re + a.im * b.im;
  Integer im = a.im * b.re - a.re * b.im;
  GaussInt q;
  mpz_divexact(q.re.get_mpz_t(), re.get_mpz_t(), n.get_mpz_t());
  mpz_divexact(q.im.get_mpz_t(), im.get_mpz_t(), n.get_mpz_t());
  return q;
}

// Scales each row by the lcm of its denominators.
std::vector<std::vector<GaussInt>> clear_denominators(const ExactMatrix& m) {
  std::vector<std::vector<GaussInt>> rows(m.rows(), std::vector<GaussInt>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      l = lcm(l, m(r, c).re().get_den());
      l = lcm(l, m(r, c).im().get_den());
    }
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const ExactScalar& s = m(r, c);
      rows[r][c].re = s.re().get_num() * (l / s.re().get_den());
      rows[r][c].im = s.im().get_num() * (l / s.im().get_den());
    }
  }
  return rows;
}

struct Echelon {
  std::vector<std::vector<GaussInt>> rows;  // first `pivots.size()` rows are the echelon rows
  std::vector<std::size_t> pivots;          // pivot column per echelon row
};

Echelon bareiss(const ExactMatrix& m) {
  Echelon e{clear_denominators(m), {}};
  auto& a = e.rows;
  const std::size_t nr = m.rows();
  const std::size_t nc = m.cols();
  GaussInt prev{1, 0};
  std::size_t r = 0;
  for (std::size_t c = 0; c < nc && r < nr; ++c) {
    std::size_t p = r;
    while (p < nr && a[p][c].is_zero()) ++p;
    if (p == nr) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < nr; ++i) {
      for (std::size_t j = c + 1; j < nc; ++j) {
        GaussInt t = sub(mul(a[r][c], a[i][j]), mul(a[i][c], a[r][j]));
        a[i][j] = t.is_zero() ? GaussInt{} : divexact(t, prev);
      }
      a[i][c] = GaussInt{};
    }
    prev = a[r][c];
    e.pivots.push_back(c);
    ++r;
  }
  return e;
}

ExactScalar to_scalar(const GaussInt& g) { return {Rational(g.re), Rational(g.im)}; }

}  // namespace

RankKernel rank_and_kernel(const ExactMatrix& m) {
  RankKernel out;
  if (m.rows() == 0 || m.cols() == 0) {
    for (std::size_t f = 0; f < m.cols(); ++f) {
      ScalarVector v(m.cols());
      v[f] = 1;
      out.kernel.push_back(std::move(v));
    }
    return out;
  }
  Echelon e = bareiss(m);
  out.rank = e.pivots.size();
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    ScalarVector x(m.cols());
    x[f] = 1;
    for (std::size_t k = e.pivots.size(); k-- > 0;) {
      const std::size_t pc = e.pivots[k];
      ExactScalar acc;
      for (std::size_t j = pc + 1; j < m.cols(); ++j) {
        if (x[j].is_zero() || e.rows[k][j].is_zero()) continue;
        acc += to_scalar(e.rows[k][j]) * x[j];
      }
      x[pc] = acc.is_zero() ? ExactScalar() : -acc / to_scalar(e.rows[k][pc]);
    }
    out.kernel.push_back(std::move(x));
  }
  return out;
}

std::size_t exact_rank(const ExactMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return bareiss(m).pivots.size();
}

// ---------------------------------------------------------------------------
// Integer lattices

namespace {

// Replace columns (p, c) of `a` and `u` by a unimodular combination that puts
// gcd(a[r][p], a[r][c]) in column p and 0 in column c.
void column_gcd_step(IntMatrix& a, IntMatrix& u, std::size_t r, std::size_t p, std::size_t c) {
  Integer x = a(r, p);
  Integer y = a(r, c);
  if (sgn(y) == 0) return;
  Integer g, s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  Integer xg = x / g;
  Integer yg = y / g;
  auto combine = [&](IntMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
      Integer mp = m(i, p);
      Integer mc = m(i, c);
      m(i, p) = s * mp + t * mc;
      m(i, c) = -yg * mp + xg * mc;
    }
  };
  combine(a);
  combine(u);
}

}  // namespace

std::vector<IntVector> integer_kernel(const IntMatrix& m) {
  const std::size_t n = m.cols();
  IntMatrix a = m;
  IntMatrix u = IntMatrix::identity(n);
  std::size_t pivot = 0;
  for (std::size_t r = 0; r < a.rows() && pivot < n; ++r) {
    for (std::size_t c = pivot + 1; c < n; ++c) column_gcd_step(a, u, r, pivot, c);
    if (sgn(a(r, pivot)) != 0) ++pivot;
  }
  std::vector<IntVector> basis;
  for (std::size_t c = pivot; c < n; ++c) basis.push_back(u.column(c));
  return basis;
}

IntMatrix hermite_normal_form(const IntMatrix& m) {
  // Column HNF of the transpose, read back as rows.
  IntMatrix a = m.transpose();  // n x k, lattice spanned by columns
  IntMatrix dummy(0, a.cols());
  std::size_t pivot = 0;
  std::vector<std::size_t> pivot_rows;
  for (std::size_t r = 0; r < a.rows() && pivot < a.cols(); ++r) {
    for (std::size_t c = pivot + 1; c < a.cols(); ++c) column_gcd_step(a, dummy, r, pivot, c);
    if (sgn(a(r, pivot)) == 0) continue;
    if (sgn(a(r, pivot)) < 0)
      for (std::size_t i = 0; i < a.rows(); ++i) a(i, pivot) = -a(i, pivot);
    for (std::size_t q = 0; q < pivot; ++q) {
      Integer f;
      mpz_fdiv_q(f.get_mpz_t(), a(r, q).get_mpz_t(), a(r, pivot).get_mpz_t());
      if (sgn(f) == 0) continue;
      for (std::size_t i = 0; i < a.rows(); ++i) a(i, q) -= f * a(i, pivot);
    }
    pivot_rows.push_back(r);
    ++pivot;
  }
  IntMatrix h(pivot, m.cols());
  for (std::size_t k = 0; k < pivot; ++k)
    for (std::size_t i = 0; i < m.cols(); ++i) h(k, i) = a(i, k);
  return h;
}

std::vector<Integer> smith_invariants(const IntMatrix& m) {
  IntMatrix a = m;
  const std::size_t nr = a.rows();
  const std::size_t nc = a.cols();
  std::vector<Integer> out;
  for (std::size_t t = 0; t < std::min(nr, nc); ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block goes to (t, t).
      std::size_t bi = nr, bj = nc;
      for (std::size_t i = t; i < nr; ++i)
        for (std::size_t j = t; j < nc; ++j)
          if (sgn(a(i, j)) != 0 && (bi == nr || abs(a(i, j)) < abs(a(bi, bj)))) {
            bi = i;
            bj = j;
          }
      if (bi == nr) return out;
      for (std::size_t j = 0; j < nc; ++j) std::swap(a(t, j), a(bi, j));
      for (std::size_t i = 0; i < nr; ++i) std::swap(a(i, t), a(i, bj));
      bool clean = true;
      for (std::size_t i = t + 1; i < nr; ++i) {
        Integer q = a(i, t) / a(t, t);
        if (sgn(q) != 0)
          for (std::size_t j = t; j < nc; ++j) a(i, j) -= q * a(t, j);
        if (sgn(a(i, t)) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < nc; ++j) {
        Integer q = a(t, j) / a(t, t);
        if (sgn(q) != 0)
          for (std::size_t i = t; i < nr; ++i) a(i, j) -= q * a(i, t);
        if (sgn(a(t, j)) != 0) clean = false;
      }
      if (!clean) continue;
      // Divisibility of the trailing block by the pivot.
      bool divides = true;
      for (std::size_t i = t + 1; i < nr && divides; ++i)
        for (std::size_t j = t + 1; j < nc; ++j)
          if (a(i, j) % a(t, t) != 0) {
            for (std::size_t k = t; k < nc; ++k) a(t, k) += a(i, k);
            divides = false;
            break;
          }
      if (divides) break;
    }
    out.push_back(abs(a(t, t)));
  }
  return out;
}

bool same_lattice(const IntMatrix& a, const IntMatrix& b) {
  return a.cols() == b.cols() && hermite_normal_form(a) == hermite_normal_form(b);
}

bool is_saturated(const std::vector<IntVector>& rows, std::size_t ambient) {
  if (rows.empty()) return true;
  auto inv = smith_invariants(IntMatrix::from_rows(rows, ambient));
  if (inv.size() != rows.size()) return false;  // dependent rows
  return std::all_of(inv.begin(), inv.end(), [](const Integer& d) { return d == 1; });
}

IntVector primitive(const IntVector& v) {
  Integer g = 0;
  for (const Integer& x : v) g = gcd(g, x);
  if (sgn(g) == 0 || g == 1) return v;
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
  return out;
}

Inertia inertia(const IntMatrix& q) {
  const std::size_t n = q.rows();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = q(i, j);
  Inertia out;
  std::vector<bool> done(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t p = n;
    for (std::size_t i = 0; i < n; ++i)
      if (!done[i] && sgn(a[i][i]) != 0) {
        p = i;
        break;
      }
    if (p == n) {
      // All remaining diagonal entries vanish; create one from an off-diagonal entry.
      std::size_t oi = n, oj = n;
      for (std::size_t i = 0; i < n && oi == n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (!done[i] && !done[j] && i != j && sgn(a[i][j]) != 0) {
            oi = i;
            oj = j;
            break;
          }
      if (oi == n) break;
      for (std::size_t k = 0; k < n; ++k) a[oi][k] += a[oj][k];
      for (std::size_t k = 0; k < n; ++k) a[k][oi] += a[k][oj];
      p = oi;
    }
    done[p] = true;
    if (sgn(a[p][p]) > 0) ++out.positive; else ++out.negative;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i] || sgn(a[i][p]) == 0) continue;
      Rational f = a[i][p] / a[p][p];
      for (std::size_t k = 0; k < n; ++k) a[i][k] -= f * a[p][k];
      for (std::size_t k = 0; k < n; ++k) a[k][i] -= f * a[k][p];
    }
  }
  out.zero = n - out.positive - out.negative;
  return out;
}

std::optional<std::vector<Rational>> solve_rational(const IntMatrix& a, const IntVector& b) {
  const std::size_t nr = a.rows();
  const std::size_t nc = a.cols();
  std::vector<std::vector<Rational>> m(nr, std::vector<Rational>(nc + 1));
  for (std::size_t i = 0; i < nr; ++i) {
    for (std::size_t j = 0; j < nc; ++j) m[i][j] = a(i, j);
    m[i][nc] = b[i];
  }
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < nc && r < nr; ++c) {
    std::size_t p = r;
    while (p < nr && sgn(m[p][c]) == 0) ++p;
    if (p == nr) continue;
    std::swap(m[p], m[r]);
    Rational inv = 1 / m[r][c];
    for (std::size_t j = c; j <= nc; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < nr; ++i) {
      if (i == r || sgn(m[i][c]) == 0) continue;
      Rational f = m[i][c];
      for (std::size_t j = c; j <= nc; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < nr; ++i)
    if (sgn(m[i][nc]) != 0) return std::nullopt;
  std::vector<Rational> x(nc, Rational(0));
  for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = m[k][nc];
  return x;
}

std::size_t rational_rank(const IntMatrix& m) {
  ExactMatrix e(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) e(i, j) = ExactScalar(Rational(m(i, j)));
  return exact_rank(e);
}

}  // namespace symrig
