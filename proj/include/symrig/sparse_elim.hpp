#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "symrig/scalar.hpp"

namespace symrig {

/// Field of Gaussian rationals, for StreamingEliminator.
struct GaussianRationalField {
  using value_type = ExactScalar;
  static bool is_zero(const value_type& v) { return v.is_zero(); }
  static value_type from_rational(const Rational& q) { return ExactScalar(q); }
  static value_type inv(const value_type& v) { return v.inverse(); }
  static value_type mul(const value_type& a, const value_type& b) { return a * b; }
  static value_type sub(const value_type& a, const value_type& b) { return a - b; }
  static value_type neg(const value_type& a) { return -a; }
};

/// Z/pZ for a prime p < 2^62. Rationals map through p; a denominator divisible
/// by p is a caller error (the primes used are far larger than any denominator
/// that occurs).
class PrimeField {
 public:
  using value_type = std::uint64_t;

  explicit PrimeField(std::uint64_t p) : p_(p) {}

  std::uint64_t modulus() const { return p_; }
  bool is_zero(value_type v) const { return v == 0; }
  value_type from_rational(const Rational& q) const;
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>((static_cast<unsigned __int128>(a) * b) % p_);
  }
  value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + p_ - b; }
  value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
  value_type inv(value_type a) const;

 private:
  std::uint64_t p_;
};

/// Incremental sparse Gaussian elimination. Rows arrive one at a time, are
/// reduced against the pivots found so far and either vanish or become a new
/// pivot (normalized to a leading 1). Only the semi-echelon pivot rows are
/// ever stored, never the full system.
template <class Field>
class StreamingEliminator {
 public:
  using value_type = typename Field::value_type;
  using Entry = std::pair<std::uint32_t, value_type>;
  using SparseRow = std::vector<Entry>;  // strictly increasing column order

  StreamingEliminator(std::size_t cols, Field field = Field()) : field_(std::move(field)), pivots_(cols) {}

  std::size_t cols() const { return pivots_.size(); }
  std::size_t rank() const { return rank_; }
  std::size_t rows_seen() const { return rows_seen_; }

  /// Returns true when the row was independent of the rows already added.
  bool add_row(SparseRow row) {
    ++rows_seen_;
    drop_zeros(row);
    while (!row.empty()) {
      const std::uint32_t lead = row.front().first;
      auto& pivot = pivots_[lead];
      if (!pivot) {
        value_type s = field_.inv(row.front().second);
        for (auto& e : row) e.second = field_.mul(e.second, s);
        pivot = std::move(row);
        ++rank_;
        return true;
      }
      row = axpy(row, *pivot, row.front().second);
    }
    return false;
  }

  /// Kernel basis of the accumulated system, one vector per free column
  /// (1 in that column, 0 in the other free columns).
  std::vector<std::vector<value_type>> kernel() const {
    const std::size_t n = pivots_.size();
    std::vector<std::vector<value_type>> basis;
    for (std::size_t f = 0; f < n; ++f) {
      if (pivots_[f]) continue;
      std::vector<value_type> x(n, value_type{});
      x[f] = field_.from_rational(Rational(1));
      for (std::size_t c = f; c-- > 0;) {
        if (!pivots_[c]) continue;
        value_type acc{};
        for (const auto& [col, v] : *pivots_[c]) {
          if (col == c || field_.is_zero(x[col])) continue;
          acc = field_.sub(acc, field_.mul(v, x[col]));
        }
        x[c] = acc;
      }
      basis.push_back(std::move(x));
    }
    return basis;
  }

  const Field& field() const { return field_; }

 private:
  void drop_zeros(SparseRow& row) const {
    row.erase(std::remove_if(row.begin(), row.end(), [this](const Entry& e) { return field_.is_zero(e.second); }),
              row.end());
  }

  // row - factor * pivot, merged by column.
  SparseRow axpy(const SparseRow& row, const SparseRow& pivot, const value_type& factor) const {
    SparseRow out;
    out.reserve(row.size() + pivot.size());
    std::size_t i = 0, j = 0;
    while (i < row.size() || j < pivot.size()) {
      if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
        out.push_back(row[i++]);
      } else if (i == row.size() || pivot[j].first < row[i].first) {
        out.emplace_back(pivot[j].first, field_.neg(field_.mul(factor, pivot[j].second)));
        ++j;
      } else {
        value_type v = field_.sub(row[i].second, field_.mul(factor, pivot[j].second));
        if (!field_.is_zero(v)) out.emplace_back(row[i].first, std::move(v));
        ++i;
        ++j;
      }
    }
    return out;
  }

  Field field_;
  std::vector<std::optional<SparseRow>> pivots_;
  std::size_t rank_ = 0;
  std::size_t rows_seen_ = 0;
};

}  // namespace symrig
