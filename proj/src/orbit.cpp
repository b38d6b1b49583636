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

#include "crcw/orbit.hpp"

#include "crcw/error.hpp"

namespace crcw {

namespace {

void CheckIrreducibleBase(const Poly& g) {
  if (!g.is_monic() || g.degree() < 1) {
    Fail(ErrorCode::kInvalidInput, "g must be monic of positive degree");
  }
  if (g[0] == 0) Fail(ErrorCode::kInvalidInput, "g must satisfy g(0) != 0");
  if (!IsIrreducible(g)) Fail(ErrorCode::kInvalidInput, "g must be irreducible");
}

std::uint64_t CheckedMul(std::uint64_t a, std::uint64_t b) {
  const unsigned __int128 r = static_cast<unsigned __int128>(a) * b;
  if (r > UINT64_MAX) Fail(ErrorCode::kResource, "enumeration size exceeds 64 bits");
  return static_cast<std::uint64_t>(r);
}

std::uint64_t GeneratorOrder(std::uint64_t p, std::uint32_t l, std::uint32_t k) {
  // least m with k p^m >= l
  return CheckedPow(p, CeilLog(p, (l + k - 1) / k));
}

// Index of a_(i,j,k) within the (i, j, k)-sorted generator list.
class GeneratorIndex {
 public:
  GeneratorIndex(std::uint32_t delta, std::uint32_t r, std::uint32_t l,
                 std::uint32_t p)
      : r_(r), l_(l), table_(static_cast<std::size_t>(delta) * r * l, -1) {
    std::int64_t next = 0;
    for (std::uint32_t i = 0; i < delta; ++i) {
      for (std::uint32_t j = 0; j < r; ++j) {
        for (std::uint32_t k = 1; k < l; ++k) {
          if (k % p != 0) table_[Slot(i, j, k)] = next++;
        }
      }
    }
  }

  std::int64_t operator()(std::uint32_t i, std::uint32_t j, std::uint32_t k) const {
    return table_[Slot(i, j, k)];
  }

 private:
  std::size_t Slot(std::uint32_t i, std::uint32_t j, std::uint32_t k) const {
    return (static_cast<std::size_t>(i) * r_ + j) * l_ + k;
  }

  std::uint32_t r_;
  std::uint32_t l_;
  std::vector<std::int64_t> table_;
};

Poly CheckedModulus(const Poly& g, std::uint32_t l) {
  CheckIrreducibleBase(g);
  if (l < 1) Fail(ErrorCode::kInvalidInput, "l must be at least 1");
  return PolyPow(g, l);
}

}  // namespace

GAdicForm GAdicDigits(const Poly& f, const Poly& g, std::uint32_t t) {
  if (g.degree() < 1) Fail(ErrorCode::kInvalidInput, "g must have positive degree");
  if (f.degree() >= static_cast<int>(t) * g.degree()) {
    Fail(ErrorCode::kInvalidInput, "g-adic expansion needs deg f < t deg g");
  }
  GAdicForm form;
  form.digits.reserve(t);
  Poly rest = f;
  for (std::uint32_t l = 0; l < t; ++l) {
    auto [quo, rem] = PolyDivMod(rest, g);
    form.digits.push_back(std::move(rem));
    rest = std::move(quo);
  }
  return form;
}

Poly FromGAdic(const GAdicForm& form, const Poly& g) {
  Poly acc(g.field());
  for (std::size_t l = form.digits.size(); l-- > 0;) {
    acc = acc * g + form.digits[l];
  }
  return acc;
}

BigInt UnitGroupOrder(const Poly& g, std::uint32_t l) {
  if (l < 1) Fail(ErrorCode::kInvalidInput, "l must be at least 1");
  const BigInt q = g.field()->q();
  const unsigned r = static_cast<unsigned>(g.degree());
  return (boost::multiprecision::pow(q, r) - 1) *
         boost::multiprecision::pow(q, (l - 1) * r);
}

std::vector<SylowGenerator> SylowGenerators(const Poly& g, std::uint32_t l) {
  if (l < 2) Fail(ErrorCode::kInvalidInput, "the p-Sylow subgroup is trivial for l < 2");
  if (g.degree() < 1) Fail(ErrorCode::kInvalidInput, "g must have positive degree");
  const FieldPtr& field = g.field();
  const std::uint32_t p = field->p();
  const std::uint32_t r = static_cast<std::uint32_t>(g.degree());
  const Poly one = Poly::Constant(field, 1);
  std::vector<Poly> g_pow{one};
  for (std::uint32_t k = 1; k < l; ++k) g_pow.push_back(g_pow.back() * g);
  std::vector<SylowGenerator> out;
  for (std::uint32_t i = 0; i < field->delta(); ++i) {
    for (std::uint32_t j = 0; j < r; ++j) {
      for (std::uint32_t k = 1; k < l; ++k) {
        if (k % p == 0) continue;
        Poly poly = one + Poly::Monomial(field, field->alpha_power(i), j) * g_pow[k];
        out.push_back({i, j, k, std::move(poly), GeneratorOrder(p, l, k)});
      }
    }
  }
  return out;
}

std::vector<std::uint64_t> SylowDecompose(const Poly& f, const Poly& g,
                                          std::uint32_t l) {
  const FieldPtr& field = g.field();
  const std::uint32_t p = field->p();
  const std::uint32_t r = static_cast<std::uint32_t>(g.degree());
  const std::vector<SylowGenerator> gens = SylowGenerators(g, l);
  const GeneratorIndex index(field->delta(), r, l, p);
  const QuotientRing ring(PolyPow(g, l));
  const QuotientRing residue(g);

  QuotientRing::Elem cur = ring.FromPoly(f);
  if (!residue.IsOne(residue.FromPoly(ring.ToPoly(cur)))) {
    Fail(ErrorCode::kInvalidInput, "element is not congruent to 1 modulo g");
  }
  std::vector<std::uint64_t> exps(gens.size(), 0);
  const std::uint32_t frob_period = field->delta() * r;

  // Peel one g-adic layer at a time. At layer h = h' p^e the digit is the
  // p^e-th power of sum c_ij alpha^i x^j, which is matched by raising the
  // level-h' generators to c_ij p^e.
  for (std::uint32_t h = 1; h < l; ++h) {
    const GAdicForm form = GAdicDigits(ring.ToPoly(cur), g, l);
    const Poly& digit = form.digits[h];
    if (digit.is_zero()) continue;
    std::uint32_t e = 0;
    std::uint32_t hp = h;
    while (hp % p == 0) {
      hp /= p;
      ++e;
    }
    QuotientRing::Elem root = residue.FromPoly(digit);
    const std::uint32_t steps = (frob_period - e % frob_period) % frob_period;
    for (std::uint32_t s = 0; s < steps; ++s) root = residue.Pow(root, p);
    const std::uint64_t pe = CheckedPow(p, e);
    for (std::uint32_t j = 0; j < r; ++j) {
      const std::vector<std::uint32_t> coords = field->digits(root[j]);
      for (std::uint32_t i = 0; i < field->delta(); ++i) {
        if (coords[i] == 0) continue;
        const std::int64_t idx = index(i, j, hp);
        if (idx < 0) Fail(ErrorCode::kInternal, "missing Sylow generator");
        const SylowGenerator& gen = gens[static_cast<std::size_t>(idx)];
        const std::uint64_t add = coords[i] * pe;
        exps[idx] += add;
        if (exps[idx] >= gen.order) {
          Fail(ErrorCode::kInternal, "Sylow exponent out of range");
        }
        cur = ring.Mul(cur, ring.Pow(ring.FromPoly(gen.poly), gen.order - add));
      }
    }
  }
  if (!ring.IsOne(cur)) Fail(ErrorCode::kInternal, "Sylow decomposition did not close");
  return exps;
}

XSplit SplitX(const Poly& g, std::uint32_t l) {
  CheckIrreducibleBase(g);
  if (l < 2) Fail(ErrorCode::kInvalidInput, "x split needs l >= 2");
  const FieldPtr& field = g.field();
  const std::uint32_t p = field->p();
  const std::uint32_t r = static_cast<std::uint32_t>(g.degree());
  const std::uint64_t ord_g = PolyOrder(g);
  const Poly modulus = PolyPow(g, l);

  XSplit split{PolyPowMod(Poly::X(field), ord_g, modulus), Poly(field), 0, 0, {}};
  const std::uint64_t group = CheckedPow(field->q(), r) - 1;
  split.x_og = PolyPowMod(FindGroupGenerator(g), group / ord_g, g);
  split.x_p_exponents = SylowDecompose(split.x_p, g, l);

  const GeneratorIndex index(field->delta(), r, l, p);
  for (std::uint32_t i = 0; i < field->delta(); ++i) {
    for (std::uint32_t j = 0; j < r; ++j) {
      if (split.x_p_exponents[index(i, j, 1)] % p != 0) {
        split.i0 = i;
        split.j0 = j;
        return split;
      }
    }
  }
  Fail(ErrorCode::kInternal, "x_p has no level-1 exponent prime to p");
}

std::uint64_t UnitOrbitSize(const Poly& g, std::uint32_t l) {
  const std::uint64_t p = g.field()->p();
  return CheckedMul(PolyOrder(g), CheckedPow(p, CeilLog(p, l)));
}

UnitOrbitEnumerator::UnitOrbitEnumerator(const Poly& g, std::uint32_t l)
    : g_(g),
      l_(l),
      modulus_(CheckedModulus(g, l)),
      ring_(modulus_),
      residue_(g),
      h_(g.field()) {
  const FieldPtr& field = g.field();
  const std::uint32_t r = static_cast<std::uint32_t>(g.degree());
  h_ = FindGroupGenerator(g);
  const std::uint64_t ord_g = PolyOrder(g);
  outer_count_ = (CheckedPow(field->q(), r) - 1) / ord_g;
  orbit_size_ = UnitOrbitSize(g, l);
  if (l >= 2) {
    split_ = SplitX(g, l);
    generators_ = SylowGenerators(g, l);
    for (std::size_t n = 0; n < generators_.size(); ++n) {
      const SylowGenerator& a = generators_[n];
      if (a.k == 1 && a.i == split_->i0 && a.j == split_->j0) continue;
      active_.push_back(n);
      active_elems_.push_back(ring_.FromPoly(a.poly));
      inner_count_ = CheckedMul(inner_count_, a.order);
    }
  }
  count_ = CheckedMul(outer_count_, inner_count_);
  if (BigInt(count_) * orbit_size_ != UnitGroupOrder(g, l)) {
    Fail(ErrorCode::kInternal, "unit orbit family has the wrong cardinality");
  }
  digits_.assign(active_.size(), 0);
  Seek(0);
}

void UnitOrbitEnumerator::LoadOuter() {
  const QuotientRing::Elem ht = residue_.Pow(residue_.FromPoly(h_), outer_);
  current_ = ring_.FromPoly(residue_.ToPoly(ht));
}

void UnitOrbitEnumerator::Seek(std::uint64_t index) {
  index_ = index;
  if (index >= count_) return;
  outer_ = index / inner_count_;
  std::uint64_t rem = index % inner_count_;
  LoadOuter();
  for (std::size_t n = active_.size(); n-- > 0;) {
    const std::uint64_t ord = generators_[active_[n]].order;
    digits_[n] = rem % ord;
    rem /= ord;
    if (digits_[n] != 0) {
      current_ = ring_.Mul(current_, ring_.Pow(active_elems_[n], digits_[n]));
    }
  }
}

bool UnitOrbitEnumerator::Next(OrbitRep& out) {
  if (index_ >= count_) return false;
  out.element = ring_.ToPoly(current_);
  out.orbit_size = orbit_size_;
  out.valuation = 0;
  if (++index_ == count_) return true;
  // Odometer step. A wrapping digit has multiplied in a^order = 1, so the
  // running product stays exact.
  std::size_t n = active_.size();
  while (n-- > 0) {
    current_ = ring_.Mul(current_, active_elems_[n]);
    if (++digits_[n] < generators_[active_[n]].order) return true;
    digits_[n] = 0;
  }
  ++outer_;
  LoadOuter();
  return true;
}

Poly UnitOrbitEnumerator::At(std::uint64_t index) const {
  if (index >= count_) Fail(ErrorCode::kParameter, "representative index out of range");
  UnitOrbitEnumerator copy(*this);
  copy.Seek(index);
  OrbitRep rep{Poly(g_.field()), 0, 0};
  copy.Next(rep);
  return rep.element;
}

std::vector<OrbitRep> UnitOrbitReps(const Poly& g, std::uint32_t l) {
  UnitOrbitEnumerator e(g, l);
  std::vector<OrbitRep> out;
  out.reserve(e.count());
  OrbitRep rep{Poly(g.field()), 0, 0};
  while (e.Next(rep)) out.push_back(rep);
  return out;
}

std::vector<OrbitRep> RingOrbitReps(const Poly& g, std::uint32_t t) {
  if (t < 1) Fail(ErrorCode::kInvalidInput, "t must be at least 1");
  std::vector<OrbitRep> out;
  out.push_back({Poly(g.field()), 1, t});
  for (std::uint32_t l = 1; l <= t; ++l) {
    const std::uint32_t s = t - l;
    const Poly gs = PolyPow(g, s);
    UnitOrbitEnumerator e(g, l);
    OrbitRep rep{Poly(g.field()), 0, 0};
    while (e.Next(rep)) {
      out.push_back({gs * rep.element, rep.orbit_size, s});
    }
  }
  return out;
}

}  // namespace crcw
