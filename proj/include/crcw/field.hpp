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

// Arithmetic in GF(q), q = p^delta, realised as F_p[alpha]/(mu(alpha)).
//
// Elements are handled by their canonical integer encoding
//   code = sum_i coeffs[i] * p^i,   coeffs in basis 1, alpha, ..., alpha^(delta-1)
// which is also the encoding used by every file format and the CLI.

#ifndef CRCW_FIELD_HPP_
#define CRCW_FIELD_HPP_

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace crcw {

// Canonical integer encoding of a field element, always in [0, q).
using Fq = std::uint32_t;

class GaloisField;
using FieldPtr = std::shared_ptr<const GaloisField>;

class GaloisField {
 public:
  // Largest supported field order; multiplication goes through log tables.
  static constexpr std::uint32_t kMaxOrder = 1u << 16;

  // Uses the least monic irreducible of degree delta (ordered by the integer
  // encoding of its lower coefficients).
  static FieldPtr Create(std::uint32_t p, std::uint32_t delta);
  // `modulus` lists F_p coefficients constant term first and must be monic of
  // degree exactly delta and irreducible.
  static FieldPtr Create(std::uint32_t p, std::uint32_t delta,
                         std::vector<std::uint32_t> modulus);

  std::uint32_t p() const { return p_; }
  std::uint32_t delta() const { return delta_; }
  std::uint32_t q() const { return q_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  // Basis element alpha^i, 0 <= i < delta.
  Fq alpha_power(std::uint32_t i) const;

  Fq add(Fq a, Fq b) const {
    if (p_ == 2) return a ^ b;
    if (delta_ == 1) return (a + b) % p_;
    if (!add_table_.empty()) return add_table_[a * q_ + b];
    return AddDigits(a, b);
  }
  Fq neg(Fq a) const { return neg_table_[a]; }
  Fq sub(Fq a, Fq b) const { return add(a, neg(b)); }
  Fq mul(Fq a, Fq b) const {
    if (a == 0 || b == 0) return 0;
    if (delta_ == 1) {
      return static_cast<Fq>(static_cast<std::uint64_t>(a) * b % p_);
    }
    std::uint32_t e = log_[a] + log_[b];
    if (e >= q_ - 1) e -= q_ - 1;
    return exp_[e];
  }
  Fq inv(Fq a) const;
  Fq pow(Fq a, std::uint64_t e) const;
  // The unique b with b^p = a (Frobenius is bijective on a finite field).
  Fq pth_root(Fq a) const;

  std::vector<std::uint32_t> digits(Fq a) const;
  Fq from_digits(const std::vector<std::uint32_t>& d) const;

  bool operator==(const GaloisField& other) const {
    return p_ == other.p_ && delta_ == other.delta_ &&
           modulus_ == other.modulus_;
  }

  std::string ToString() const;

 private:
  GaloisField(std::uint32_t p, std::uint32_t delta,
              std::vector<std::uint32_t> modulus);

  Fq AddDigits(Fq a, Fq b) const;
  Fq SlowMul(Fq a, Fq b) const;

  std::uint32_t p_;
  std::uint32_t delta_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<Fq> add_table_;
  std::vector<Fq> neg_table_;
  std::vector<Fq> exp_;
  std::vector<std::uint32_t> log_;
};

bool SameField(const FieldPtr& a, const FieldPtr& b);

// A field element bound to its field, for callers that want the checked
// value-level interface. Internal code works on bare Fq codes.
class FqElement {
 public:
  FqElement(FieldPtr field, Fq code);
  static FqElement FromCoeffs(FieldPtr field,
                              const std::vector<std::uint32_t>& coeffs);

  const FieldPtr& field() const { return field_; }
  Fq code() const { return code_; }
  std::vector<std::uint32_t> coeffs() const { return field_->digits(code_); }
  bool is_zero() const { return code_ == 0; }

  bool operator==(const FqElement& o) const {
    return code_ == o.code_ && SameField(field_, o.field_);
  }

 private:
  FieldPtr field_;
  Fq code_;
};

FqElement FqAdd(const FqElement& a, const FqElement& b);
FqElement FqMul(const FqElement& a, const FqElement& b);
FqElement FqInv(const FqElement& a);
FqElement FqPow(const FqElement& a, std::uint64_t e);

bool IsPrime(std::uint64_t n);

}  // namespace crcw

#endif  // CRCW_FIELD_HPP_
