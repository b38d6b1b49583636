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

#include "crcw/field.hpp"

#include <sstream>
#include <utility>

#include "crcw/error.hpp"

namespace crcw {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParameter: return "parameter error";
    case ErrorCode::kDivisionByZero: return "division by zero";
    case ErrorCode::kUndefinedInput: return "undefined input";
    case ErrorCode::kInvalidInput: return "invalid input";
    case ErrorCode::kParse: return "parse error";
    case ErrorCode::kResource: return "resource limit";
    case ErrorCode::kInternal: return "internal consistency error";
  }
  return "unknown error";
}

bool IsPrime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

namespace {

using Digits = std::vector<std::uint32_t>;

void Trim(Digits& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo the monic b, over F_p.
Digits ModP(Digits a, const Digits& b, std::uint32_t p) {
  Trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const std::uint32_t lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      a[shift + i] = static_cast<std::uint32_t>(
          (a[shift + i] + static_cast<std::uint64_t>(p - lead) * b[i]) % p);
    }
    Trim(a);
  }
  return a;
}

Digits Monic(std::uint32_t p, std::uint32_t degree, std::uint64_t code) {
  Digits f(degree + 1, 0);
  for (std::uint32_t i = 0; i < degree; ++i) {
    f[i] = static_cast<std::uint32_t>(code % p);
    code /= p;
  }
  f[degree] = 1;
  return f;
}

std::uint64_t IntPow(std::uint64_t b, std::uint32_t e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Trial division by every monic polynomial of degree <= deg/2.
bool IsIrreducibleOverPrime(const Digits& f, std::uint32_t p) {
  const std::uint32_t deg = static_cast<std::uint32_t>(f.size() - 1);
  for (std::uint32_t d = 1; 2 * d <= deg; ++d) {
    const std::uint64_t count = IntPow(p, d);
    for (std::uint64_t c = 0; c < count; ++c) {
      if (ModP(f, Monic(p, d, c), p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

FieldPtr GaloisField::Create(std::uint32_t p, std::uint32_t delta) {
  if (delta == 0) Fail(ErrorCode::kParameter, "delta must be at least 1");
  if (p > kMaxOrder || !IsPrime(p)) {
    Fail(ErrorCode::kParameter, "p must be a prime <= 65536");
  }
  if (delta > 16 || IntPow(p, delta) > kMaxOrder) {
    Fail(ErrorCode::kParameter, "field order exceeds supported maximum 65536");
  }
  const std::uint64_t count = IntPow(p, delta);
  for (std::uint64_t c = 0; c < count; ++c) {
    Digits f = Monic(p, delta, c);
    if (IsIrreducibleOverPrime(f, p)) return Create(p, delta, std::move(f));
  }
  Fail(ErrorCode::kInternal, "no irreducible polynomial found");
}

FieldPtr GaloisField::Create(std::uint32_t p, std::uint32_t delta,
                             std::vector<std::uint32_t> modulus) {
  if (delta == 0) Fail(ErrorCode::kParameter, "delta must be at least 1");
  if (p > kMaxOrder || !IsPrime(p)) {
    Fail(ErrorCode::kParameter, "p must be a prime <= 65536");
  }
  if (delta > 16 || IntPow(p, delta) > kMaxOrder) {
    Fail(ErrorCode::kParameter, "field order exceeds supported maximum 65536");
  }
  if (modulus.size() != delta + 1 || modulus.back() != 1) {
    Fail(ErrorCode::kParameter,
         "field modulus must be monic of degree exactly delta");
  }
  for (std::uint32_t c : modulus) {
    if (c >= p) Fail(ErrorCode::kParameter, "modulus coefficient >= p");
  }
  if (!IsIrreducibleOverPrime(modulus, p)) {
    Fail(ErrorCode::kParameter, "field modulus is not irreducible over F_p");
  }
  return FieldPtr(new GaloisField(p, delta, std::move(modulus)));
}

GaloisField::GaloisField(std::uint32_t p, std::uint32_t delta,
                         std::vector<std::uint32_t> modulus)
    : p_(p),
      delta_(delta),
      q_(static_cast<std::uint32_t>(IntPow(p, delta))),
      modulus_(std::move(modulus)) {
  neg_table_.resize(q_);
  for (Fq a = 0; a < q_; ++a) {
    Digits d = digits(a);
    for (auto& x : d) x = (p_ - x) % p_;
    neg_table_[a] = from_digits(d);
  }
  if (p_ != 2 && delta_ > 1 && q_ <= 256) {
    add_table_.resize(static_cast<std::size_t>(q_) * q_);
    for (Fq a = 0; a < q_; ++a) {
      for (Fq b = 0; b < q_; ++b) add_table_[a * q_ + b] = AddDigits(a, b);
    }
  }
  if (delta_ == 1) return;

  // Find the least generator of the multiplicative group, then build
  // exp/log tables from its powers.
  std::vector<std::uint32_t> primes;
  std::uint32_t m = q_ - 1;
  for (std::uint32_t d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      primes.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) primes.push_back(m);
  auto slow_pow = [this](Fq a, std::uint32_t e) {
    Fq r = 1;
    while (e > 0) {
      if (e & 1) r = SlowMul(r, a);
      a = SlowMul(a, a);
      e >>= 1;
    }
    return r;
  };
  Fq gen = 0;
  for (Fq c = 2; c < q_ && gen == 0; ++c) {
    bool ok = true;
    for (std::uint32_t l : primes) {
      if (slow_pow(c, (q_ - 1) / l) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) gen = c;
  }
  if (gen == 0) Fail(ErrorCode::kInternal, "multiplicative generator not found");
  exp_.resize(q_ - 1);
  log_.assign(q_, 0);
  Fq cur = 1;
  for (std::uint32_t e = 0; e < q_ - 1; ++e) {
    exp_[e] = cur;
    log_[cur] = e;
    cur = SlowMul(cur, gen);
  }
}

Fq GaloisField::AddDigits(Fq a, Fq b) const {
  Fq r = 0;
  Fq scale = 1;
  for (std::uint32_t i = 0; i < delta_; ++i) {
    r += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return r;
}

Fq GaloisField::SlowMul(Fq a, Fq b) const {
  const Digits da = digits(a);
  const Digits db = digits(b);
  Digits prod(2 * delta_, 0);
  for (std::uint32_t i = 0; i < delta_; ++i) {
    for (std::uint32_t j = 0; j < delta_; ++j) {
      prod[i + j] = static_cast<std::uint32_t>(
          (prod[i + j] + static_cast<std::uint64_t>(da[i]) * db[j]) % p_);
    }
  }
  Digits rem = ModP(std::move(prod), modulus_, p_);
  rem.resize(delta_, 0);
  return from_digits(rem);
}

Fq GaloisField::alpha_power(std::uint32_t i) const {
  if (i >= delta_) Fail(ErrorCode::kParameter, "alpha power index >= delta");
  return static_cast<Fq>(IntPow(p_, i));
}

Fq GaloisField::inv(Fq a) const {
  if (a == 0) Fail(ErrorCode::kDivisionByZero, "inverse of zero");
  if (delta_ == 1) return pow(a, p_ - 2);
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

Fq GaloisField::pow(Fq a, std::uint64_t e) const {
  if (a == 0) {
    if (e == 0) Fail(ErrorCode::kUndefinedInput, "0^0 is undefined");
    return 0;
  }
  Fq r = 1;
  while (e > 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

Fq GaloisField::pth_root(Fq a) const {
  if (a == 0) return 0;
  return pow(a, q_ / p_);
}

std::vector<std::uint32_t> GaloisField::digits(Fq a) const {
  Digits d(delta_);
  for (std::uint32_t i = 0; i < delta_; ++i) {
    d[i] = a % p_;
    a /= p_;
  }
  return d;
}

Fq GaloisField::from_digits(const std::vector<std::uint32_t>& d) const {
  if (d.size() > delta_) Fail(ErrorCode::kParameter, "too many digits");
  Fq r = 0;
  for (std::size_t i = d.size(); i-- > 0;) {
    if (d[i] >= p_) Fail(ErrorCode::kParameter, "digit out of range");
    r = r * p_ + d[i];
  }
  return r;
}

std::string GaloisField::ToString() const {
  std::ostringstream os;
  os << "GF(" << p_;
  if (delta_ > 1) os << "^" << delta_;
  os << ")";
  return os.str();
}

bool SameField(const FieldPtr& a, const FieldPtr& b) {
  return a == b || (a && b && *a == *b);
}

FqElement::FqElement(FieldPtr field, Fq code)
    : field_(std::move(field)), code_(code) {
  if (!field_) Fail(ErrorCode::kParameter, "null field");
  if (code_ >= field_->q()) Fail(ErrorCode::kParameter, "element code >= q");
}

FqElement FqElement::FromCoeffs(FieldPtr field,
                                const std::vector<std::uint32_t>& coeffs) {
  const Fq code = field->from_digits(coeffs);
  return FqElement(std::move(field), code);
}

namespace {

void CheckSame(const FqElement& a, const FqElement& b) {
  if (!SameField(a.field(), b.field())) {
    Fail(ErrorCode::kParameter, "elements belong to different fields");
  }
}

}  // namespace

FqElement FqAdd(const FqElement& a, const FqElement& b) {
  CheckSame(a, b);
  return FqElement(a.field(), a.field()->add(a.code(), b.code()));
}

FqElement FqMul(const FqElement& a, const FqElement& b) {
  CheckSame(a, b);
  return FqElement(a.field(), a.field()->mul(a.code(), b.code()));
}

FqElement FqInv(const FqElement& a) {
  return FqElement(a.field(), a.field()->inv(a.code()));
}

FqElement FqPow(const FqElement& a, std::uint64_t e) {
  return FqElement(a.field(), a.field()->pow(a.code(), e));
}

}  // namespace crcw
