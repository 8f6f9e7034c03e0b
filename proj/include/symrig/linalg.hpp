#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "symrig/scalar.hpp"

namespace symrig {

using ScalarVector = std::vector<ExactScalar>;
using IntVector = std::vector<Integer>;

/// Dense row-major matrix over Q(i).
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static ExactMatrix identity(std::size_t n);
  static ExactMatrix from_rows(const std::vector<ScalarVector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  ExactScalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const ExactScalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  ScalarVector column(std::size_t c) const;
  ScalarVector apply(const ScalarVector& v) const;
  bool is_zero() const;

  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b);
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<ExactScalar> data_;
};

/// Dense row-major matrix over Z.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntVector row(std::size_t r) const;
  IntVector column(std::size_t c) const;
  IntVector apply(const IntVector& v) const;
  IntMatrix transpose() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

struct RankKernel {
  std::size_t rank = 0;
  std::vector<ScalarVector> kernel;
};

/// Rank by fraction-free (Bareiss) elimination over the Gaussian integers,
/// after clearing row denominators. Kernel vectors come from back-substitution
/// on the resulting echelon form: one per free column, with a 1 in that column.
RankKernel rank_and_kernel(const ExactMatrix& m);

/// Rank only (same elimination, no kernel).
std::size_t exact_rank(const ExactMatrix& m);

/// Z-basis of {v in Z^n : m v = 0}. The basis is saturated: it is read off the
/// unimodular transform of a column Hermite reduction.
std::vector<IntVector> integer_kernel(const IntMatrix& m);

/// Row Hermite normal form of the lattice spanned by the rows of m (zero rows
/// dropped): positive pivots, entries above each pivot reduced into [0, pivot).
IntMatrix hermite_normal_form(const IntMatrix& m);

/// Nonzero invariant factors d1 | d2 | ... of the Smith normal form.
std::vector<Integer> smith_invariants(const IntMatrix& m);

/// True when the rows of a and b span the same sublattice of Z^n.
bool same_lattice(const IntMatrix& a, const IntMatrix& b);

/// True when every vector of `rows` (as a lattice basis) generates a saturated
/// sublattice, i.e. all Smith invariants are 1.
bool is_saturated(const std::vector<IntVector>& rows, std::size_t ambient);

/// Primitive version of v (coordinates divided by their gcd, sign kept).
IntVector primitive(const IntVector& v);

struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
};

/// Sylvester inertia of a symmetric integer matrix by rational congruence
/// (symmetric elimination with pivot search).
Inertia inertia(const IntMatrix& q);

/// Solve A x = b over Q for an integer matrix; nullopt if inconsistent.
/// When the solution is not unique an arbitrary one (free variables 0) is returned.
std::optional<std::vector<Rational>> solve_rational(const IntMatrix& a, const IntVector& b);

/// Rank of an integer matrix over Q.
std::size_t rational_rank(const IntMatrix& m);

}  // namespace symrig
