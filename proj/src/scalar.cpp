#include "symrig/scalar.hpp"

#include <ostream>
#include <stdexcept>

#include "symrig/error.hpp"

namespace symrig {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kTagMismatch: return "TAG_MISMATCH";
    case ErrorCode::kInternal: return "INTERNAL";
    case ErrorCode::kHermiticityBroken: return "HERMITICITY_BROKEN";
    case ErrorCode::kNotTraceless: return "NOT_TRACELESS";
    case ErrorCode::kTorusConstraint: return "TORUS_CONSTRAINT";
    case ErrorCode::kZeroInput: return "ZERO_INPUT";
    case ErrorCode::kNotDominant: return "NOT_DOMINANT";
    case ErrorCode::kAmbiguous: return "AMBIGUOUS";
    case ErrorCode::kDegenerate: return "DEGENERATE";
    case ErrorCode::kInvalidCorner: return "INVALID_CORNER";
    case ErrorCode::kUnknownLabel: return "UNKNOWN_LABEL";
    case ErrorCode::kInvalidSolution: return "INVALID_SOLUTION";
    case ErrorCode::kInvalidLocation: return "INVALID_LOCATION";
    case ErrorCode::kNotIsometry: return "NOT_ISOMETRY";
    case ErrorCode::kInvalidArgument: return "INVALID_ARGUMENT";
  }
  return "UNKNOWN";
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& o) {
  re_ += o.re_;
  if (sgn(o.im_) != 0) im_ += o.im_;
  return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& o) {
  re_ -= o.re_;
  if (sgn(o.im_) != 0) im_ -= o.im_;
  return *this;
}

ExactScalar& ExactScalar::operator*=(const ExactScalar& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

ExactScalar ExactScalar::inverse() const {
  if (is_zero()) throw std::domain_error("ExactScalar: division by zero");
  if (sgn(im_) == 0) return ExactScalar(Rational(1 / re_));
  Rational n = re_ * re_ + im_ * im_;
  return {Rational(re_ / n), Rational(-im_ / n)};
}

ExactScalar& ExactScalar::operator/=(const ExactScalar& o) { return *this *= o.inverse(); }

namespace {
std::string rational_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}
}  // namespace

std::string ExactScalar::to_string() const {
  std::string s = rational_string(re_);
  s += sgn(im_) < 0 ? "-" : "+";
  s += rational_string(abs(im_));
  s += "*i";
  return s;
}

std::ostream& operator<<(std::ostream& os, const ExactScalar& s) { return os << s.to_string(); }

Rational ScalarSampler::rational() {
  std::uniform_int_distribution<long> num(-height_, height_);
  std::uniform_int_distribution<long> den(1, height_);
  Rational q(num(rng_), den(rng_));
  q.canonicalize();
  return q;
}

Rational ScalarSampler::nonzero_rational() {
  for (;;) {
    Rational q = rational();
    if (sgn(q) != 0) return q;
  }
}

ExactScalar ScalarSampler::scalar() {
  Rational re = rational();
  if (std::bernoulli_distribution(0.5)(rng_)) return ExactScalar(re);
  return {re, rational()};
}

ExactScalar ScalarSampler::nonzero_scalar() {
  for (;;) {
    ExactScalar s = scalar();
    if (!s.is_zero()) return s;
  }
}

}  // namespace symrig

#include "symrig/sparse_elim.hpp"

namespace symrig {

PrimeField::value_type PrimeField::from_rational(const Rational& q) const {
  Integer p(std::to_string(p_));
  Integer num = q.get_num() % p;
  if (sgn(num) < 0) num += p;
  Integer den = q.get_den() % p;
  Integer den_inv;
  mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
  Integer r = (num * den_inv) % p;
  return std::stoull(r.get_str());
}

PrimeField::value_type PrimeField::inv(value_type a) const {
  // Fermat: a^(p-2).
  value_type result = 1, base = a;
  std::uint64_t e = p_ - 2;
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

}  // namespace symrig
