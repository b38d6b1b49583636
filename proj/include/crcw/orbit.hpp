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

// One representative per x-orbit of R = F_q[x]/(g^t), g irreducible.
//
// R splits into {0} and the x-stable layers g^s * M_(g^(t-s)), s = 0..t-1,
// where M_(g^l) is the unit group of F_q[x]/(g^l). Unit orbits are cosets of
// <x>, and
//   M_(g^l) = C x S_p,   |C| = q^r - 1,   |S_p| = q^((l-1) r),
// with S_p = {1 + m g} the direct product of the cyclic groups generated by
//   a_(i,j,k) = 1 + alpha^i x^j g^k,  0 <= i < delta, 0 <= j < r,
//                                      1 <= k < l, p does not divide k,
// of order p^ceil(log_p(l/k)). Writing x = x_og * x_p with
// x_p = x^ord(g) in S_p, one generator a_(i0,j0,1) can be traded for x_p, and
// the remaining generators together with powers of a generator h of
// (F_q[x]/(g))^* enumerate a transversal of M_(g^l) / <x>.

#ifndef CRCW_ORBIT_HPP_
#define CRCW_ORBIT_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "crcw/poly.hpp"

namespace crcw {

struct GAdicForm {
  // f = sum_l digits[l] * g^l, deg digits[l] < deg g.
  std::vector<Poly> digits;

  // A ring element is a unit iff its 0-th digit is nonzero.
  bool invertible() const { return !digits.empty() && !digits[0].is_zero(); }
};

GAdicForm GAdicDigits(const Poly& f, const Poly& g, std::uint32_t t);
Poly FromGAdic(const GAdicForm& form, const Poly& g);

// (q^r - 1) q^((l-1) r)
BigInt UnitGroupOrder(const Poly& g, std::uint32_t l);

struct SylowGenerator {
  std::uint32_t i;
  std::uint32_t j;
  std::uint32_t k;
  Poly poly;            // 1 + alpha^i x^j g^k, reduced mod g^l
  std::uint64_t order;  // p^ceil(log_p(l/k))
};

// Sorted lexicographically by (i, j, k). kInvalidInput for l < 2.
std::vector<SylowGenerator> SylowGenerators(const Poly& g, std::uint32_t l);

// Exponents c, aligned with SylowGenerators(g, l), such that
//   prod a^c == f (mod g^l),  0 <= c < order.
// f must be congruent to 1 modulo g.
std::vector<std::uint64_t> SylowDecompose(const Poly& f, const Poly& g,
                                          std::uint32_t l);

struct XSplit {
  Poly x_p;                 // x^ord(g) mod g^l
  Poly x_og;                // h^((q^r-1)/ord g) mod g
  std::uint32_t i0;
  std::uint32_t j0;
  std::vector<std::uint64_t> x_p_exponents;
};

XSplit SplitX(const Poly& g, std::uint32_t l);

struct OrbitRep {
  Poly element;
  std::uint64_t orbit_size;
  std::uint32_t valuation;  // largest s with g^s | element (t for zero)
};

// ord(g) * p^ceil(log_p l): the order of x in M_(g^l), and the size of every
// unit orbit.
std::uint64_t UnitOrbitSize(const Poly& g, std::uint32_t l);

// Lazily enumerates unit orbit representatives of M_(g^l) in the order
// (t, c_1, ..., c_m), last exponent fastest, where the representative is
//   h^t * prod a^c  mod g^l
// over every Sylow generator except a_(i0,j0,1). Ranges of indices can be
// enumerated independently.
class UnitOrbitEnumerator {
 public:
  UnitOrbitEnumerator(const Poly& g, std::uint32_t l);

  std::uint64_t count() const { return count_; }
  std::uint64_t orbit_size() const { return orbit_size_; }
  const std::vector<SylowGenerator>& generators() const { return generators_; }
  const Poly& group_generator() const { return h_; }
  const std::optional<XSplit>& split() const { return split_; }

  // Positions the enumerator so that the next call to Next() yields the
  // representative with the given index.
  void Seek(std::uint64_t index);
  // Returns false once all `count()` representatives have been produced.
  bool Next(OrbitRep& out);

  // The representative at `index`, computed from scratch.
  Poly At(std::uint64_t index) const;

 private:
  void LoadOuter();

  Poly g_;
  std::uint32_t l_;
  Poly modulus_;  // g^l
  QuotientRing ring_;
  QuotientRing residue_;  // F_q[x]/(g)
  Poly h_;
  std::optional<XSplit> split_;
  std::vector<SylowGenerator> generators_;
  std::vector<std::size_t> active_;  // generator indices used in the product
  std::vector<QuotientRing::Elem> active_elems_;
  std::uint64_t outer_count_ = 0;    // (q^r - 1) / ord(g)
  std::uint64_t inner_count_ = 1;    // prod of active orders
  std::uint64_t count_ = 0;
  std::uint64_t orbit_size_ = 0;

  // cursor
  std::uint64_t index_ = 0;
  std::uint64_t outer_ = 0;
  std::vector<std::uint64_t> digits_;
  QuotientRing::Elem current_;
};

std::vector<OrbitRep> UnitOrbitReps(const Poly& g, std::uint32_t l);

// Zero first, then the layers g^s * M_(g^(t-s)) for s = t-1 down to 0.
std::vector<OrbitRep> RingOrbitReps(const Poly& g, std::uint32_t t);

}  // namespace crcw

#endif  // CRCW_ORBIT_HPP_
