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

#include "crcw/poly.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "crcw/error.hpp"

namespace crcw {

namespace {

void CheckField(const Poly& a, const Poly& b) {
  if (!SameField(a.field(), b.field())) {
    Fail(ErrorCode::kParameter, "polynomials over different fields");
  }
}

}  // namespace

Poly::Poly(FieldPtr field, std::vector<Fq> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  if (!field_) Fail(ErrorCode::kParameter, "null field");
  for (Fq c : coeffs_) {
    if (c >= field_->q()) Fail(ErrorCode::kParameter, "coefficient >= q");
  }
  Trim();
}

void Poly::Trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::Constant(FieldPtr field, Fq c) {
  return Poly(std::move(field), std::vector<Fq>{c});
}

Poly Poly::Monomial(FieldPtr field, Fq c, std::size_t degree) {
  std::vector<Fq> v(degree + 1, 0);
  v[degree] = c;
  return Poly(std::move(field), std::move(v));
}

Poly Poly::FromCode(FieldPtr field, std::uint64_t code) {
  const std::uint64_t q = field->q();
  std::vector<Fq> v;
  while (code > 0) {
    v.push_back(static_cast<Fq>(code % q));
    code /= q;
  }
  return Poly(std::move(field), std::move(v));
}

std::uint64_t Poly::Code() const {
  const unsigned __int128 q = field_->q();
  unsigned __int128 r = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    r = r * q + coeffs_[i];
    if (r > UINT64_MAX) {
      Fail(ErrorCode::kResource, "polynomial code exceeds 64 bits");
    }
  }
  return static_cast<std::uint64_t>(r);
}

std::string Poly::ToString() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) os << ',';
    os << coeffs_[i];
  }
  return os.str();
}

Poly Poly::operator+(const Poly& o) const {
  CheckField(*this, o);
  const GaloisField& f = *field_;
  std::vector<Fq> v(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.add((*this)[i], o[i]);
  return Poly(field_, std::move(v));
}

Poly Poly::operator-(const Poly& o) const {
  CheckField(*this, o);
  const GaloisField& f = *field_;
  std::vector<Fq> v(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.sub((*this)[i], o[i]);
  return Poly(field_, std::move(v));
}

Poly Poly::operator-() const {
  std::vector<Fq> v(coeffs_);
  for (auto& c : v) c = field_->neg(c);
  return Poly(field_, std::move(v));
}

Poly Poly::operator*(const Poly& o) const {
  CheckField(*this, o);
  if (is_zero() || o.is_zero()) return Poly(field_);
  const GaloisField& f = *field_;
  std::vector<Fq> v(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
      v[i + j] = f.add(v[i + j], f.mul(coeffs_[i], o.coeffs_[j]));
    }
  }
  return Poly(field_, std::move(v));
}

Poly Poly::Scale(Fq c) const {
  std::vector<Fq> v(coeffs_);
  for (auto& x : v) x = field_->mul(x, c);
  return Poly(field_, std::move(v));
}

Poly Poly::ShiftUp(std::size_t k) const {
  if (is_zero()) return *this;
  std::vector<Fq> v(k, 0);
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return Poly(field_, std::move(v));
}

Poly Poly::Monic() const {
  if (is_zero() || is_monic()) return *this;
  return Scale(field_->inv(lead()));
}

Poly Poly::Derivative() const {
  if (coeffs_.size() <= 1) return Poly(field_);
  std::vector<Fq> v(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    // i * c_i, with i reduced into the prime field.
    const Fq k = static_cast<Fq>(i % field_->p());
    v[i - 1] = field_->mul(k, coeffs_[i]);
  }
  return Poly(field_, std::move(v));
}

Fq Poly::Eval(Fq x) const {
  Fq r = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    r = field_->add(field_->mul(r, x), coeffs_[i]);
  }
  return r;
}

bool CanonicalLess(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t i = a.coeffs().size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

std::pair<Poly, Poly> PolyDivMod(const Poly& a, const Poly& b) {
  CheckField(a, b);
  if (b.is_zero()) Fail(ErrorCode::kDivisionByZero, "polynomial division by zero");
  const GaloisField& f = *a.field();
  if (a.degree() < b.degree()) return {Poly(a.field()), a};
  std::vector<Fq> rem = a.coeffs();
  const std::size_t db = static_cast<std::size_t>(b.degree());
  std::vector<Fq> quo(rem.size() - db, 0);
  const Fq inv_lead = f.inv(b.lead());
  for (std::size_t i = rem.size(); i-- > db;) {
    const Fq c = f.mul(rem[i], inv_lead);
    if (c == 0) continue;
    quo[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) {
      rem[i - db + j] = f.sub(rem[i - db + j], f.mul(c, b.coeffs()[j]));
    }
  }
  rem.resize(db);
  return {Poly(a.field(), std::move(quo)), Poly(a.field(), std::move(rem))};
}

Poly PolyMod(const Poly& a, const Poly& b) { return PolyDivMod(a, b).second; }
Poly PolyDiv(const Poly& a, const Poly& b) { return PolyDivMod(a, b).first; }

Poly PolyGcd(const Poly& a, const Poly& b) {
  CheckField(a, b);
  if (a.is_zero() && b.is_zero()) {
    Fail(ErrorCode::kUndefinedInput, "gcd(0, 0) is undefined");
  }
  Poly x = a;
  Poly y = b;
  while (!y.is_zero()) {
    Poly r = PolyMod(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return x.Monic();
}

Poly PolyInverseMod(const Poly& a, const Poly& m) {
  CheckField(a, m);
  // Extended Euclid tracking only the coefficient of a.
  Poly r0 = m;
  Poly r1 = PolyMod(a, m);
  Poly s0(a.field());
  Poly s1 = Poly::Constant(a.field(), 1);
  while (!r1.is_zero()) {
    auto [quo, rem] = PolyDivMod(r0, r1);
    Poly s2 = s0 - quo * s1;
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.degree() != 0) {
    Fail(ErrorCode::kInvalidInput, "polynomial is not invertible modulo m");
  }
  return PolyMod(s0.Scale(a.field()->inv(r0.lead())), m);
}

Poly PolyMulMod(const Poly& a, const Poly& b, const Poly& m) {
  return PolyMod(a * b, m);
}

Poly PolyPowMod(const Poly& a, std::uint64_t e, const Poly& m) {
  if (m.degree() < 1) return Poly(a.field());
  const QuotientRing ring(m.Monic());
  return ring.ToPoly(ring.Pow(ring.FromPoly(a), e));
}

Poly PolyPow(const Poly& a, std::uint64_t e) {
  Poly result = Poly::Constant(a.field(), 1);
  Poly base = a;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

// ---------------------------------------------------------------------------
// QuotientRing

QuotientRing::QuotientRing(Poly modulus)
    : modulus_(std::move(modulus)),
      dim_(static_cast<std::size_t>(std::max(modulus_.degree(), 0))) {
  if (!modulus_.is_monic() || modulus_.degree() < 1) {
    Fail(ErrorCode::kParameter, "quotient ring modulus must be monic, deg >= 1");
  }
  neg_low_.resize(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    neg_low_[i] = modulus_.field()->neg(modulus_[i]);
  }
}

QuotientRing::Elem QuotientRing::One() const {
  Elem e(dim_, 0);
  e[0] = 1;
  return e;
}

QuotientRing::Elem QuotientRing::FromPoly(const Poly& a) const {
  const Poly r = a.degree() >= static_cast<int>(dim_) ? PolyMod(a, modulus_) : a;
  Elem e(dim_, 0);
  std::copy(r.coeffs().begin(), r.coeffs().end(), e.begin());
  return e;
}

Poly QuotientRing::ToPoly(const Elem& a) const { return Poly(field(), a); }

QuotientRing::Elem QuotientRing::Mul(const Elem& a, const Elem& b) const {
  const GaloisField& f = *field();
  std::vector<Fq> prod(2 * dim_ - 1, 0);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (b[j] == 0) continue;
      prod[i + j] = f.add(prod[i + j], f.mul(a[i], b[j]));
    }
  }
  for (std::size_t i = prod.size(); i-- > dim_;) {
    const Fq c = prod[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      prod[i - dim_ + j] = f.add(prod[i - dim_ + j], f.mul(c, neg_low_[j]));
    }
  }
  prod.resize(dim_);
  return prod;
}

void QuotientRing::MulXInPlace(Elem& a) const {
  const GaloisField& f = *field();
  const Fq top = a[dim_ - 1];
  for (std::size_t i = dim_ - 1; i > 0; --i) a[i] = a[i - 1];
  a[0] = 0;
  if (top != 0) {
    for (std::size_t j = 0; j < dim_; ++j) {
      a[j] = f.add(a[j], f.mul(top, neg_low_[j]));
    }
  }
}

QuotientRing::Elem QuotientRing::Pow(Elem a, std::uint64_t e) const {
  Elem r = One();
  while (e > 0) {
    if (e & 1) r = Mul(r, a);
    e >>= 1;
    if (e) a = Mul(a, a);
  }
  return r;
}

bool QuotientRing::IsOne(const Elem& a) const {
  if (a[0] != 1) return false;
  for (std::size_t i = 1; i < dim_; ++i) {
    if (a[i] != 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Integer helpers

std::uint64_t CheckedPow(std::uint64_t base, std::uint64_t e) {
  unsigned __int128 r = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    r *= base;
    if (r > UINT64_MAX) Fail(ErrorCode::kResource, "integer power exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(r);
}

std::uint32_t CeilLog(std::uint64_t p, std::uint64_t v) {
  std::uint32_t m = 0;
  unsigned __int128 pm = 1;
  while (pm < v) {
    pm *= p;
    ++m;
  }
  return m;
}

namespace {

using u128 = unsigned __int128;

std::uint64_t MulModU64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t PowModU64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e > 0) {
    if (e & 1) r = MulModU64(r, a, m);
    a = MulModU64(a, a, m);
    e >>= 1;
  }
  return r;
}

// Deterministic Miller-Rabin for 64-bit integers.
bool IsProbablePrime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t sp : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % sp == 0) return n == sp;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = PowModU64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = MulModU64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

constexpr std::uint64_t kRhoIterationBudget = 1ULL << 22;
constexpr std::uint64_t kRhoAttempts = 48;

// Brent's variant of Pollard rho; returns a nontrivial factor or 0.
std::uint64_t PollardBrent(std::uint64_t n, std::uint64_t c) {
  auto f = [&](std::uint64_t x) { return (MulModU64(x, x, n) + c) % n; };
  std::uint64_t y = 2, x = 2, g = 1, q = 1, ys = 2;
  const std::uint64_t m = 128;
  std::uint64_t r = 1;
  std::uint64_t steps = 0;
  while (g == 1) {
    x = y;
    for (std::uint64_t i = 0; i < r; ++i) y = f(y);
    std::uint64_t k = 0;
    while (k < r && g == 1) {
      ys = y;
      for (std::uint64_t i = 0; i < std::min(m, r - k); ++i) {
        y = f(y);
        q = MulModU64(q, x > y ? x - y : y - x, n);
      }
      g = std::gcd(q, n);
      k += m;
      steps += m;
    }
    r *= 2;
    if (steps > kRhoIterationBudget) return 0;
  }
  if (g == n) {
    do {
      ys = f(ys);
      g = std::gcd(x > ys ? x - ys : ys - x, n);
    } while (g == 1);
  }
  return g == n ? 0 : g;
}

void SplitInto(std::uint64_t n, std::vector<std::uint64_t>& out) {
  if (n == 1) return;
  if (IsProbablePrime(n)) {
    out.push_back(n);
    return;
  }
  for (std::uint64_t c = 1; c <= kRhoAttempts; ++c) {
    const std::uint64_t d = PollardBrent(n, c);
    if (d != 0) {
      SplitInto(d, out);
      SplitInto(n / d, out);
      return;
    }
  }
  Fail(ErrorCode::kResource, "integer factorization exceeded effort budget");
}

}  // namespace

std::vector<std::uint64_t> IntegerFactor(std::uint64_t n) {
  if (n == 0) Fail(ErrorCode::kInvalidInput, "cannot factor 0");
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d < (1u << 16) && d * d <= n; ++d) {
    while (n % d == 0) {
      out.push_back(d);
      n /= d;
    }
  }
  SplitInto(n, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint64_t> DistinctPrimes(std::uint64_t n) {
  std::vector<std::uint64_t> f = IntegerFactor(n);
  f.erase(std::unique(f.begin(), f.end()), f.end());
  return f;
}

// ---------------------------------------------------------------------------
// Factorization

namespace {

// c(x) = sum_k c_{pk} x^{pk}  ->  sum_k c_{pk}^{1/p} x^k
Poly PthRootPoly(const Poly& c) {
  const GaloisField& f = *c.field();
  const std::size_t p = f.p();
  std::vector<Fq> v((c.coeffs().size() + p - 1) / p, 0);
  for (std::size_t i = 0; i < c.coeffs().size(); ++i) {
    if (i % p == 0) {
      v[i / p] = f.pth_root(c.coeffs()[i]);
    } else if (c.coeffs()[i] != 0) {
      Fail(ErrorCode::kInternal, "p-th root of a non-p-th-power polynomial");
    }
  }
  return Poly(c.field(), std::move(v));
}

void SquareFreeInto(const Poly& f, std::uint32_t mult_scale,
                    std::vector<FactorPower>& out) {
  if (f.degree() < 1) return;
  Poly c = PolyGcd(f, f.Derivative());
  Poly w = PolyDiv(f, c);
  std::uint32_t i = 1;
  while (!w.is_one()) {
    Poly y = PolyGcd(w, c);
    Poly fac = PolyDiv(w, y);
    if (fac.degree() > 0) out.push_back({fac, i * mult_scale});
    w = std::move(y);
    c = PolyDiv(c, w);
    ++i;
  }
  if (c.degree() > 0) {
    SquareFreeInto(PthRootPoly(c), mult_scale * c.field()->p(), out);
  }
}

// Splits a squarefree monic f into products of irreducibles of equal degree.
std::vector<std::pair<Poly, std::uint32_t>> DistinctDegree(Poly f) {
  std::vector<std::pair<Poly, std::uint32_t>> out;
  const FieldPtr& field = f.field();
  const Poly x = Poly::X(field);
  Poly h = PolyMod(x, f);
  std::uint32_t d = 1;
  while (f.degree() >= 2 * static_cast<int>(d)) {
    h = PolyPowMod(h, field->q(), f);
    Poly g = PolyGcd(h - x, f);
    if (!g.is_one()) {
      out.emplace_back(g, d);
      f = PolyDiv(f, g);
      h = PolyMod(h, f);
    }
    ++d;
  }
  if (f.degree() > 0) {
    out.emplace_back(f, static_cast<std::uint32_t>(f.degree()));
  }
  return out;
}

void EqualDegreeInto(const Poly& f, std::uint32_t d, std::mt19937_64& rng,
                     std::vector<Poly>& out) {
  if (f.degree() == static_cast<int>(d)) {
    out.push_back(f);
    return;
  }
  const FieldPtr& field = f.field();
  const std::uint32_t q = field->q();
  const QuotientRing ring(f);
  for (;;) {
    std::vector<Fq> v(static_cast<std::size_t>(f.degree()));
    for (auto& c : v) c = static_cast<Fq>(rng() % q);
    Poly a(field, std::move(v));
    if (a.degree() < 1) continue;
    QuotientRing::Elem ae = ring.FromPoly(a);
    QuotientRing::Elem b;
    if (field->p() == 2) {
      // Absolute trace to F_2: sum of a^(2^i), i < delta*d.
      b = ae;
      QuotientRing::Elem t = ae;
      for (std::uint32_t i = 1; i < field->delta() * d; ++i) {
        t = ring.Mul(t, t);
        for (std::size_t k = 0; k < b.size(); ++k) b[k] = field->add(b[k], t[k]);
      }
    } else {
      // a^((q^d-1)/2) = (a * a^q * ... * a^(q^(d-1)))^((q-1)/2)
      QuotientRing::Elem prod = ae;
      QuotientRing::Elem t = ae;
      for (std::uint32_t i = 1; i < d; ++i) {
        t = ring.Pow(t, q);
        prod = ring.Mul(prod, t);
      }
      b = ring.Pow(prod, (q - 1) / 2);
      b[0] = field->sub(b[0], 1);
    }
    Poly bp = ring.ToPoly(b);
    if (bp.is_zero()) continue;
    Poly g = PolyGcd(bp, f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      EqualDegreeInto(g, d, rng, out);
      EqualDegreeInto(PolyDiv(f, g), d, rng, out);
      return;
    }
  }
}

}  // namespace

Factorization Factorize(const Poly& f, std::uint64_t seed) {
  if (f.is_zero()) Fail(ErrorCode::kInvalidInput, "cannot factor the zero polynomial");
  Factorization result;
  result.unit = f.lead();
  result.seed = seed;
  std::mt19937_64 rng(seed);
  std::vector<FactorPower> squarefree;
  SquareFreeInto(f.Monic(), 1, squarefree);
  for (const auto& [part, mult] : squarefree) {
    for (auto& [block, d] : DistinctDegree(part)) {
      std::vector<Poly> irreducibles;
      EqualDegreeInto(block, d, rng, irreducibles);
      for (auto& g : irreducibles) result.factors.push_back({std::move(g), mult});
    }
  }
  std::sort(result.factors.begin(), result.factors.end(),
            [](const FactorPower& a, const FactorPower& b) {
              return CanonicalLess(a.factor, b.factor);
            });
  // Distinct squarefree parts are coprime, so factors never repeat.
  for (std::size_t i = 1; i < result.factors.size(); ++i) {
    if (result.factors[i].factor == result.factors[i - 1].factor) {
      Fail(ErrorCode::kInternal, "factorization produced a repeated factor");
    }
  }
  return result;
}

Poly Expand(const Factorization& fac) {
  if (fac.factors.empty()) {
    Fail(ErrorCode::kParameter, "empty factorization has no field");
  }
  const FieldPtr& field = fac.factors.front().factor.field();
  Poly r = Poly::Constant(field, fac.unit);
  for (const auto& [g, e] : fac.factors) r = r * PolyPow(g, e);
  return r;
}

bool IsIrreducible(const Poly& f) {
  if (f.degree() < 1) return false;
  const Factorization fac = Factorize(f);
  return fac.factors.size() == 1 && fac.factors[0].multiplicity == 1;
}

namespace {

// Multiplicative order of x modulo an irreducible g with g(0) != 0.
std::uint64_t IrreducibleOrder(const Poly& g) {
  const std::uint64_t q = g.field()->q();
  const std::uint64_t group = CheckedPow(q, static_cast<std::uint64_t>(g.degree())) - 1;
  const QuotientRing ring(g);
  const QuotientRing::Elem x = ring.FromPoly(Poly::X(g.field()));
  std::uint64_t o = group;
  for (std::uint64_t l : DistinctPrimes(group)) {
    while (o % l == 0 && ring.IsOne(ring.Pow(x, o / l))) o /= l;
  }
  return o;
}

std::uint64_t CheckedLcm(std::uint64_t a, std::uint64_t b) {
  const u128 r = static_cast<u128>(a / std::gcd(a, b)) * b;
  if (r > UINT64_MAX) Fail(ErrorCode::kResource, "order exceeds 64 bits");
  return static_cast<std::uint64_t>(r);
}

}  // namespace

std::uint64_t PolyOrder(const Poly& f) {
  if (f.is_zero()) Fail(ErrorCode::kInvalidInput, "the zero polynomial has no order");
  if (f.degree() == 0) return 1;
  if (f[0] == 0) Fail(ErrorCode::kInvalidInput, "x divides f, order undefined");
  const Factorization fac = Factorize(f);
  std::uint64_t o = 1;
  std::uint32_t max_e = 1;
  for (const auto& [g, e] : fac.factors) {
    o = CheckedLcm(o, IrreducibleOrder(g));
    max_e = std::max(max_e, e);
  }
  const std::uint64_t p = f.field()->p();
  const std::uint64_t ppow = CheckedPow(p, CeilLog(p, max_e));
  const u128 r = static_cast<u128>(o) * ppow;
  if (r > UINT64_MAX) Fail(ErrorCode::kResource, "order exceeds 64 bits");
  return static_cast<std::uint64_t>(r);
}

bool IsPrimitive(const Poly& f) {
  if (!f.is_monic() || !IsIrreducible(f)) {
    Fail(ErrorCode::kInvalidInput, "primitivity needs a monic irreducible polynomial");
  }
  if (f[0] == 0) Fail(ErrorCode::kInvalidInput, "primitivity needs f(0) != 0");
  const std::uint64_t q = f.field()->q();
  return PolyOrder(f) ==
         CheckedPow(q, static_cast<std::uint64_t>(f.degree())) - 1;
}

Poly FindGroupGenerator(const Poly& g) {
  if (IsPrimitive(g)) return Poly::X(g.field());
  const std::uint64_t q = g.field()->q();
  const std::uint64_t size = CheckedPow(q, static_cast<std::uint64_t>(g.degree()));
  const std::uint64_t group = size - 1;
  const std::vector<std::uint64_t> primes = DistinctPrimes(group);
  const QuotientRing ring(g);
  for (std::uint64_t code = 1; code < size; ++code) {
    const QuotientRing::Elem h = ring.FromPoly(Poly::FromCode(g.field(), code));
    bool generator = true;
    for (std::uint64_t l : primes) {
      if (ring.IsOne(ring.Pow(h, group / l))) {
        generator = false;
        break;
      }
    }
    if (generator) return ring.ToPoly(h);
  }
  Fail(ErrorCode::kInternal, "no generator found in a cyclic group");
}

}  // namespace crcw
