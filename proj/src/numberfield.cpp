// Copyright 2026 The heckecf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "heckecf/numberfield.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace heckecf {

namespace {

using IntPoly = std::vector<long long>;  // ascending coefficients

// Exact division of integer polynomials; the quotient must be integral
// (cyclotomic factors are monic, so long division never leaves Z).
IntPoly poly_div_exact(IntPoly a, const IntPoly& b) {
  if (b.empty() || b.back() != 1) {
    throw std::logic_error("poly_div_exact: divisor must be monic");
  }
  if (a.size() < b.size()) throw std::logic_error("poly_div_exact: degree");
  IntPoly q(a.size() - b.size() + 1, 0);
  for (int k = static_cast<int>(q.size()) - 1; k >= 0; --k) {
    long long c = a[k + b.size() - 1];
    q[k] = c;
    if (c == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) a[k + j] -= c * b[j];
  }
  for (long long c : a) {
    if (c != 0) throw std::logic_error("poly_div_exact: nonzero remainder");
  }
  return q;
}

IntPoly cyclotomic(int n) {
  IntPoly r(n + 1, 0);  // x^n - 1
  r[0] = -1;
  r[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) r = poly_div_exact(r, cyclotomic(d));
  }
  return r;
}

using RatPoly = std::vector<Rational>;  // ascending, trimmed

void rp_trim(RatPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

RatPoly rp_divmod(RatPoly a, const RatPoly& b, RatPoly* quot) {
  quot->assign(a.size() > b.size() ? a.size() - b.size() + 1 : 1, Rational(0));
  while (a.size() >= b.size() && !a.empty()) {
    Rational c = a.back() / b.back();
    size_t shift = a.size() - b.size();
    (*quot)[shift] = c;
    for (size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
    rp_trim(a);
    if (a.size() >= b.size() && a.size() > 0 && a.back().is_zero()) rp_trim(a);
  }
  rp_trim(*quot);
  return a;  // remainder
}

RatPoly rp_mul(const RatPoly& a, const RatPoly& b) {
  if (a.empty() || b.empty()) return {};
  RatPoly r(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i) {
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

RatPoly rp_sub(RatPoly a, const RatPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  rp_trim(a);
  return a;
}

}  // namespace

std::vector<long long> minimal_poly(int q) {
  if (q < 3) throw std::domain_error("minimal_poly: q must be >= 3");
  IntPoly phi = cyclotomic(2 * q);
  int m = (static_cast<int>(phi.size()) - 1) / 2;
  // phi is palindromic of even degree 2m; phi(x)/x^m rewrites as a polynomial
  // in y = x + 1/x through P_k(y) = x^k + x^{-k}.
  IntPoly psi(m + 1, 0);
  psi[0] = phi[m];
  IntPoly pkm1{2};     // P_0
  IntPoly pk{0, 1};    // P_1
  for (int k = 1; k <= m; ++k) {
    for (size_t j = 0; j < pk.size(); ++j) psi[j] += phi[m + k] * pk[j];
    if (k < m) {
      IntPoly next(pk.size() + 1, 0);
      for (size_t j = 0; j < pk.size(); ++j) next[j + 1] = pk[j];
      for (size_t j = 0; j < pkm1.size(); ++j) next[j] -= pkm1[j];
      pkm1 = pk;
      pk = next;
    }
  }
  return psi;
}

double lambda_value(int q) {
  if (q < 3) throw std::domain_error("lambda_value: q must be >= 3");
  return 2.0 * std::cos(std::acos(-1.0) / q);
}

double eval_poly_compensated(const std::vector<long long>& coeffs, double x) {
  if (coeffs.empty()) return 0.0;
  double s = static_cast<double>(coeffs.back());
  double comp = 0.0;
  for (int i = static_cast<int>(coeffs.size()) - 2; i >= 0; --i) {
    double p = s * x;
    double pi = std::fma(s, x, -p);
    double ai = static_cast<double>(coeffs[i]);
    double t = p + ai;
    double z = t - p;
    double sigma = (p - (t - z)) + (ai - z);
    s = t;
    comp = comp * x + (pi + sigma);
  }
  return s + comp;
}

NumberField::NumberField(int q)
    : q_(q),
      minpoly_(minimal_poly(q)),
      lambda_(lambda_value(q)) {
  degree_ = static_cast<int>(minpoly_.size()) - 1;
  // lambda^degree in the basis, then each further power by one more shift.
  std::vector<Rational> base(degree_, Rational(0));
  for (int k = 0; k < degree_; ++k) base[k] = Rational(-minpoly_[k]);
  powers_.push_back(base);
  for (int j = 1; j + 1 < degree_; ++j) {
    const std::vector<Rational>& prev = powers_.back();
    std::vector<Rational> next(degree_, Rational(0));
    for (int k = 0; k + 1 < degree_; ++k) next[k + 1] = prev[k];
    Rational top = prev[degree_ - 1];
    for (int k = 0; k < degree_; ++k) next[k] += top * base[k];
    powers_.push_back(next);
  }
}

FieldPtr make_field(int q) { return std::make_shared<NumberField>(q); }

FieldElement::FieldElement(FieldPtr field, std::vector<Rational> coeffs)
    : field_(std::move(field)), c_(std::move(coeffs)) {
  if (static_cast<int>(c_.size()) != field_->degree()) {
    throw std::invalid_argument("FieldElement: coefficient count != degree");
  }
}

FieldElement FieldElement::zero(const FieldPtr& f) {
  return FieldElement(f, std::vector<Rational>(f->degree(), Rational(0)));
}

FieldElement FieldElement::one(const FieldPtr& f) {
  std::vector<Rational> c(f->degree(), Rational(0));
  c[0] = Rational(1);
  return FieldElement(f, c);
}

FieldElement FieldElement::lambda(const FieldPtr& f) {
  if (f->degree() == 1) {
    // Degenerate field (q = 3): lambda is the rational root of the linear
    // minimal polynomial.
    std::vector<Rational> c{Rational(-f->minpoly()[0])};
    return FieldElement(f, c);
  }
  std::vector<Rational> c(f->degree(), Rational(0));
  c[1] = Rational(1);
  return FieldElement(f, c);
}

FieldElement FieldElement::from_rational(const FieldPtr& f,
                                         const Rational& r) {
  std::vector<Rational> c(f->degree(), Rational(0));
  c[0] = r;
  return FieldElement(f, c);
}

FieldElement FieldElement::from_int(const FieldPtr& f, long long n) {
  return from_rational(f, Rational(n));
}

bool FieldElement::is_zero() const {
  for (const Rational& r : c_) {
    if (!r.is_zero()) return false;
  }
  return true;
}

bool FieldElement::is_rational() const {
  for (size_t k = 1; k < c_.size(); ++k) {
    if (!c_[k].is_zero()) return false;
  }
  return true;
}

namespace {
void check_same_field(const FieldElement& a, const FieldElement& b) {
  if (a.field()->q() != b.field()->q()) {
    throw std::invalid_argument("FieldElement: mixed fields");
  }
}
}  // namespace

FieldElement FieldElement::operator-() const {
  std::vector<Rational> c(c_.size());
  for (size_t k = 0; k < c_.size(); ++k) c[k] = -c_[k];
  return FieldElement(field_, c);
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  check_same_field(a, b);
  std::vector<Rational> c(a.c_.size());
  for (size_t k = 0; k < c.size(); ++k) c[k] = a.c_[k] + b.c_[k];
  return FieldElement(a.field_, c);
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  check_same_field(a, b);
  std::vector<Rational> c(a.c_.size());
  for (size_t k = 0; k < c.size(); ++k) c[k] = a.c_[k] - b.c_[k];
  return FieldElement(a.field_, c);
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  check_same_field(a, b);
  int d = a.field_->degree();
  std::vector<Rational> conv(2 * d - 1, Rational(0));
  for (int i = 0; i < d; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (int j = 0; j < d; ++j) conv[i + j] += a.c_[i] * b.c_[j];
  }
  std::vector<Rational> c(conv.begin(), conv.begin() + d);
  for (int k = d; k < 2 * d - 1; ++k) {
    if (conv[k].is_zero()) continue;
    const std::vector<Rational>& pw = a.field_->power(k - d);
    for (int t = 0; t < d; ++t) c[t] += conv[k] * pw[t];
  }
  return FieldElement(a.field_, c);
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw std::domain_error("FieldElement: inverse of zero");
  int d = field_->degree();
  // Extended Euclid for c_ against the (irreducible) minimal polynomial:
  // maintains s*this ≡ r (mod minpoly) until r is a nonzero constant.
  RatPoly r0(d + 1);
  for (int k = 0; k <= d; ++k) r0[k] = Rational(field_->minpoly()[k]);
  RatPoly r1(c_);
  rp_trim(r1);
  RatPoly s0;          // zero polynomial
  RatPoly s1{Rational(1)};
  while (r1.size() > 1) {
    RatPoly quot;
    RatPoly rem = rp_divmod(r0, r1, &quot);
    r0 = r1;
    r1 = rem;
    RatPoly s2 = rp_sub(s0, rp_mul(quot, s1));
    s0 = s1;
    s1 = s2;
  }
  if (r1.empty()) throw std::domain_error("FieldElement: not invertible");
  Rational inv_c = Rational(1) / r1[0];
  std::vector<Rational> out(d, Rational(0));
  for (size_t k = 0; k < s1.size(); ++k) out[k] = s1[k] * inv_c;
  return FieldElement(field_, out);
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  return a * b.inverse();
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  check_same_field(a, b);
  return a.c_ == b.c_;
}

double FieldElement::embed() const {
  double x = field_->lambda_embed();
  double acc = 0.0;
  for (int k = static_cast<int>(c_.size()) - 1; k >= 0; --k) {
    acc = acc * x + c_[k].to_double();
  }
  return acc;
}

std::string FieldElement::str() const {
  std::string out;
  for (size_t k = 0; k < c_.size(); ++k) {
    if (k) out += " + ";
    out += c_[k].str();
    if (k == 1) out += "*L";
    if (k > 1) out += "*L^" + std::to_string(k);
  }
  return out;
}

}  // namespace heckecf
