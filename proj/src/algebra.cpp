#include "symrig/algebra.hpp"

#include <algorithm>
#include <sstream>

#include "symrig/error.hpp"

namespace symrig {

const char* to_string(AlgebraTag tag) {
  switch (tag) {
    case AlgebraTag::C: return "C";
    case AlgebraTag::CxC: return "CxC";
    case AlgebraTag::HC: return "HC";
    case AlgebraTag::OC: return "OC";
  }
  return "?";
}

AlgebraTag parse_tag(std::string_view name) {
  for (AlgebraTag t : kAllTags)
    if (name == to_string(t)) return t;
  throw Error(ErrorCode::kInvalidArgument, "unknown algebra '" + std::string(name) + "'");
}

namespace {

using IntCoeffs = std::vector<long>;

IntCoeffs cd_conj(const IntCoeffs& x) {
  IntCoeffs y = x;
  for (std::size_t k = 1; k < y.size(); ++k) y[k] = -y[k];
  return y;
}

// Cayley-Dickson product on integer coordinates; used only to tabulate the
// basis products, so no attention is paid to speed.
IntCoeffs cd_mul(const IntCoeffs& x, const IntCoeffs& y) {
  const std::size_t n = x.size();
  if (n == 1) return {x[0] * y[0]};
  const std::size_t h = n / 2;
  IntCoeffs a(x.begin(), x.begin() + h), b(x.begin() + h, x.end());
  IntCoeffs c(y.begin(), y.begin() + h), d(y.begin() + h, y.end());
  IntCoeffs ac = cd_mul(a, c), db = cd_mul(cd_conj(d), b);
  IntCoeffs da = cd_mul(d, a), bc = cd_mul(b, cd_conj(c));
  IntCoeffs out(n);
  for (std::size_t k = 0; k < h; ++k) {
    out[k] = ac[k] - db[k];
    out[h + k] = da[k] + bc[k];
  }
  return out;
}

std::vector<BasisProduct> build_table(std::size_t n) {
  std::vector<BasisProduct> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      IntCoeffs ea(n, 0), eb(n, 0);
      ea[a] = 1;
      eb[b] = 1;
      IntCoeffs p = cd_mul(ea, eb);
      auto it = std::find_if(p.begin(), p.end(), [](long v) { return v != 0; });
      table[a * n + b] = {static_cast<int>(*it), static_cast<std::size_t>(it - p.begin())};
    }
  }
  return table;
}

void check_same(const AlgElement& a, const AlgElement& b) {
  if (a.tag() != b.tag())
    throw Error(ErrorCode::kTagMismatch, std::string(to_string(a.tag())) + " vs " + to_string(b.tag()));
}

}  // namespace

const std::vector<BasisProduct>& multiplication_table(AlgebraTag tag) {
  static const std::array<std::vector<BasisProduct>, 4> tables = {build_table(1), build_table(2),
                                                                  build_table(4), build_table(8)};
  return tables[static_cast<std::size_t>(doubling_level(tag))];
}

AlgElement::AlgElement(AlgebraTag tag, std::vector<ExactScalar> coeffs) : tag_(tag), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != dim(tag)) throw Error(ErrorCode::kInvalidArgument, "coefficient count does not match tag");
}

AlgElement AlgElement::one(AlgebraTag tag) { return basis(tag, 0); }

AlgElement AlgElement::scalar(AlgebraTag tag, const ExactScalar& s) {
  AlgElement e(tag);
  e.coeffs_[0] = s;
  return e;
}

AlgElement AlgElement::basis(AlgebraTag tag, std::size_t k) {
  AlgElement e(tag);
  e.coeffs_.at(k) = 1;
  return e;
}

AlgElement AlgElement::random(AlgebraTag tag, ScalarSampler& sampler) {
  AlgElement e(tag);
  for (auto& c : e.coeffs_) c = sampler.scalar();
  return e;
}

bool AlgElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const ExactScalar& s) { return s.is_zero(); });
}

bool AlgElement::is_scalar() const {
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const ExactScalar& s) { return s.is_zero(); });
}

AlgElement& AlgElement::operator+=(const AlgElement& o) {
  check_same(*this, o);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

AlgElement& AlgElement::operator-=(const AlgElement& o) {
  check_same(*this, o);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  return *this;
}

AlgElement& AlgElement::operator*=(const ExactScalar& s) {
  for (auto& c : coeffs_)
    if (!c.is_zero()) c *= s;
  return *this;
}

AlgElement AlgElement::operator-() const {
  AlgElement e = *this;
  for (auto& c : e.coeffs_) c = -c;
  return e;
}

std::string AlgElement::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < coeffs_.size(); ++k) os << (k ? ", " : "") << coeffs_[k];
  os << ')';
  return os.str();
}

AlgElement multiply(const AlgElement& a, const AlgElement& b) {
  check_same(a, b);
  const std::size_t n = a.size();
  const auto& table = multiplication_table(a.tag());
  AlgElement out(a.tag());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b[j].is_zero()) continue;
      const BasisProduct& p = table[i * n + j];
      ExactScalar t = a[i] * b[j];
      if (p.sign > 0) out[p.index] += t; else out[p.index] -= t;
    }
  }
  return out;
}

AlgElement operator*(const AlgElement& a, const AlgElement& b) { return multiply(a, b); }

AlgElement conjugate(const AlgElement& a) {
  AlgElement out = a;
  for (std::size_t k = 1; k < out.size(); ++k) out[k] = -out[k];
  return out;
}

ExactScalar norm(const AlgElement& a) {
  AlgElement p = multiply(a, conjugate(a));
  if (!p.is_scalar()) throw Error(ErrorCode::kInternal, "a*conj(a) is not a scalar: " + p.to_string());
  return p.scalar_part();
}

ExactScalar trace_alg(const AlgElement& a) {
  AlgElement s = a + conjugate(a);
  if (!s.is_scalar()) throw Error(ErrorCode::kInternal, "a+conj(a) is not a scalar");
  return s.scalar_part();
}

}  // namespace symrig
