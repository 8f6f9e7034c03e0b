#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>

namespace symrig {

using Integer = mpz_class;
using Rational = mpq_class;

/// Element of the Gaussian rationals Q(i), stored as re + im*i.
///
/// Both parts are GMP rationals, which keep themselves in lowest terms with a
/// positive denominator after every arithmetic operation.
class ExactScalar {
 public:
  ExactScalar() = default;
  ExactScalar(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  ExactScalar(Rational re) : re_(std::move(re)) {}  // NOLINT
  ExactScalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static ExactScalar i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  ExactScalar& operator+=(const ExactScalar& o);
  ExactScalar& operator-=(const ExactScalar& o);
  ExactScalar& operator*=(const ExactScalar& o);
  ExactScalar& operator/=(const ExactScalar& o);

  friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
  friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
  friend ExactScalar operator*(ExactScalar a, const ExactScalar& b) { return a *= b; }
  friend ExactScalar operator/(ExactScalar a, const ExactScalar& b) { return a /= b; }
  ExactScalar operator-() const { return {Rational(-re_), Rational(-im_)}; }

  friend bool operator==(const ExactScalar& a, const ExactScalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const ExactScalar& a, const ExactScalar& b) { return !(a == b); }

  /// Multiplicative inverse; throws std::domain_error on zero.
  ExactScalar inverse() const;

  /// Serialized as "p/q+r/s*i" (denominators always written).
  std::string to_string() const;

 private:
  Rational re_{0};
  Rational im_{0};
};

std::ostream& operator<<(std::ostream& os, const ExactScalar& s);

/// Seeded source of bounded-height rationals for the randomized identity checks.
class ScalarSampler {
 public:
  explicit ScalarSampler(std::uint64_t seed, long height = 100) : rng_(seed), height_(height) {}

  /// num/den with |num| <= height, 1 <= den <= height.
  Rational rational();
  /// Nonzero rational of the same height.
  Rational nonzero_rational();
  /// Gaussian rational; with probability 1/2 the imaginary part is zero.
  ExactScalar scalar();
  ExactScalar nonzero_scalar();

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
  long height_;
};

}  // namespace symrig
