/*
 * Copyright 2026 The crcweight Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Dense univariate polynomials over GF(q): division, gcd, factorization,
// multiplicative order and primitive-element search.

#ifndef CRCW_POLY_HPP_
#define CRCW_POLY_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "crcw/field.hpp"

namespace crcw {

using BigInt = boost::multiprecision::cpp_int;

// Coefficients are stored constant term first with no trailing zeros, so the
// zero polynomial has an empty coefficient vector and degree -1.
class Poly {
 public:
  explicit Poly(FieldPtr field) : field_(std::move(field)) {}
  Poly(FieldPtr field, std::vector<Fq> coeffs);

  static Poly Constant(FieldPtr field, Fq c);
  static Poly Monomial(FieldPtr field, Fq c, std::size_t degree);
  static Poly X(FieldPtr field) { return Monomial(std::move(field), 1, 1); }
  // Inverse of Code(): base-q digits, constant term least significant.
  static Poly FromCode(FieldPtr field, std::uint64_t code);

  const FieldPtr& field() const { return field_; }
  const std::vector<Fq>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  Fq lead() const { return coeffs_.empty() ? 0 : coeffs_.back(); }
  Fq operator[](std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : 0;
  }

  // Canonical integer encoding sum_i c_i q^i. Throws kResource on overflow.
  std::uint64_t Code() const;
  // Comma-separated coefficient codes, constant first; "0" for zero.
  std::string ToString() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly Scale(Fq c) const;
  Poly ShiftUp(std::size_t k) const;  // multiply by x^k
  Poly Monic() const;
  Poly Derivative() const;
  Fq Eval(Fq x) const;

  bool operator==(const Poly& o) const {
    return coeffs_ == o.coeffs_ && SameField(field_, o.field_);
  }

 private:
  void Trim();

  FieldPtr field_;
  std::vector<Fq> coeffs_;
};

// Orders polynomials by degree, then by coefficients from the top down;
// for equal degrees this is the order of Code().
bool CanonicalLess(const Poly& a, const Poly& b);

std::pair<Poly, Poly> PolyDivMod(const Poly& a, const Poly& b);
Poly PolyMod(const Poly& a, const Poly& b);
Poly PolyDiv(const Poly& a, const Poly& b);
// Monic gcd. gcd(0, 0) is undefined.
Poly PolyGcd(const Poly& a, const Poly& b);
// Inverse of a modulo m; kInvalidInput when gcd(a, m) != 1.
Poly PolyInverseMod(const Poly& a, const Poly& m);
Poly PolyMulMod(const Poly& a, const Poly& b, const Poly& m);
Poly PolyPowMod(const Poly& a, std::uint64_t e, const Poly& m);
Poly PolyPow(const Poly& a, std::uint64_t e);

// Arithmetic in F_q[x]/(m) for a fixed monic modulus m. Elements are stored as
// fixed-length coefficient vectors (length deg m) which keeps the hot loops
// free of allocation-heavy Poly temporaries.
class QuotientRing {
 public:
  using Elem = std::vector<Fq>;

  explicit QuotientRing(Poly modulus);

  const Poly& modulus() const { return modulus_; }
  const FieldPtr& field() const { return modulus_.field(); }
  std::size_t dim() const { return dim_; }

  Elem Zero() const { return Elem(dim_, 0); }
  Elem One() const;
  Elem FromPoly(const Poly& a) const;
  Poly ToPoly(const Elem& a) const;

  Elem Mul(const Elem& a, const Elem& b) const;
  void MulInPlace(Elem& a, const Elem& b) const { a = Mul(a, b); }
  // a <- x * a mod m
  void MulXInPlace(Elem& a) const;
  Elem Pow(Elem a, std::uint64_t e) const;
  bool IsOne(const Elem& a) const;

 private:
  Poly modulus_;
  std::size_t dim_;
  std::vector<Fq> neg_low_;  // -m_0, ..., -m_{d-1}
};

struct FactorPower {
  Poly factor;
  std::uint32_t multiplicity;
};

struct Factorization {
  Fq unit = 0;
  // Monic irreducible, pairwise distinct, sorted by CanonicalLess.
  std::vector<FactorPower> factors;
  std::uint64_t seed = 0;
};

inline constexpr std::uint64_t kDefaultFactorSeed = 0x6372637765696768ULL;

Factorization Factorize(const Poly& f, std::uint64_t seed = kDefaultFactorSeed);
Poly Expand(const Factorization& fac);

bool IsIrreducible(const Poly& f);

// Least o with f | x^o - 1. Nonzero constants have order 1.
std::uint64_t PolyOrder(const Poly& f);
bool IsPrimitive(const Poly& f);

// A generator of (F_q[x]/(g))^*, g monic irreducible with g(0) != 0. Returns x
// when g is primitive, else the first generator in Code() order.
Poly FindGroupGenerator(const Poly& g);

// Prime factors of n with multiplicity, ascending. Trial division followed
// by Pollard-Brent with a fixed sequence of parameters.
std::vector<std::uint64_t> IntegerFactor(std::uint64_t n);
std::vector<std::uint64_t> DistinctPrimes(std::uint64_t n);

// q^e as uint64; kResource if it does not fit.
std::uint64_t CheckedPow(std::uint64_t base, std::uint64_t e);
// Least m with p^m >= v (v >= 1).
std::uint32_t CeilLog(std::uint64_t p, std::uint64_t v);

}  // namespace crcw

#endif  // CRCW_POLY_HPP_
