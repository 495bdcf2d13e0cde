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

#ifndef HECKECF_NUMBERFIELD_HPP_
#define HECKECF_NUMBERFIELD_HPP_

#include <memory>
#include <string>
#include <vector>

#include "heckecf/rational.hpp"

namespace heckecf {

// Minimal polynomial of 2cos(pi/q) over Q, monic with integer coefficients,
// returned in ascending order (coeff of x^0 first). Degree is phi(2q)/2.
// Built from the cyclotomic polynomial of order 2q folded through
// x -> x + 1/x; no integer factorization involved.
std::vector<long long> minimal_poly(int q);

// 2cos(pi/q) as a double.
double lambda_value(int q);

// Stable evaluation of an integer polynomial at x: compensated Horner, so the
// residual of minimal_poly(q) at its root stays near machine precision even
// for the larger q where plain Horner loses ~6 digits to cancellation.
double eval_poly_compensated(const std::vector<long long>& coeffs, double x);

// The field Q(lambda_q). Elements are rational coefficient vectors in the
// basis 1, lambda, ..., lambda^{d-1}; products reduce through the cached
// power table. Shared by every FieldElement built over it.
class NumberField {
 public:
  explicit NumberField(int q);

  int q() const { return q_; }
  int degree() const { return degree_; }
  const std::vector<long long>& minpoly() const { return minpoly_; }
  double lambda_embed() const { return lambda_; }

  // lambda^(degree + j) expressed in the basis, for j in [0, degree - 1).
  const std::vector<Rational>& power(int j) const { return powers_[j]; }

 private:
  int q_;
  int degree_;
  std::vector<long long> minpoly_;
  std::vector<std::vector<Rational>> powers_;
  double lambda_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

FieldPtr make_field(int q);

// An element of Q(lambda_q). Arithmetic is exact; embed() maps to double.
class FieldElement {
 public:
  // Empty element with no field attached; valid only as an assignment
  // target (lets aggregates holding elements default-construct).
  FieldElement() : c_{Rational(0)} {}
  FieldElement(FieldPtr field, std::vector<Rational> coeffs);

  static FieldElement zero(const FieldPtr& f);
  static FieldElement one(const FieldPtr& f);
  static FieldElement lambda(const FieldPtr& f);
  static FieldElement from_rational(const FieldPtr& f, const Rational& r);
  static FieldElement from_int(const FieldPtr& f, long long n);

  const FieldPtr& field() const { return field_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;  // all coefficients above degree 0 vanish
  Rational rational_part() const { return c_[0]; }

  FieldElement operator-() const;
  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  FieldElement inverse() const;

  friend bool operator==(const FieldElement& a, const FieldElement& b);
  friend bool operator!=(const FieldElement& a, const FieldElement& b) {
    return !(a == b);
  }

  double embed() const;
  std::string str() const;

 private:
  FieldPtr field_;
  std::vector<Rational> c_;
};

}  // namespace heckecf

#endif  // HECKECF_NUMBERFIELD_HPP_
