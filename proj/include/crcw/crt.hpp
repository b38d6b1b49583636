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

#ifndef CRCW_CRT_HPP_
#define CRCW_CRT_HPP_

#include <cstdint>
#include <functional>
#include <vector>

#include "crcw/orbit.hpp"
#include "crcw/poly.hpp"

namespace crcw {

// R_g = F_q[x]/(g) split along g = prod g_l^(e_l):
//   u -> (u mod g_1^(e_1), ..., u mod g_m^(e_m))
//   (u_1, ..., u_m) -> sum u_l v_l (g / g_l^(e_l))  mod g
// with v_l the inverse of g / g_l^(e_l) modulo g_l^(e_l).
class CrtBasis {
 public:
  explicit CrtBasis(const Poly& g, std::uint64_t seed = kDefaultFactorSeed);
  CrtBasis(const Poly& g, Factorization factorization);

  const Poly& g() const { return g_; }
  const Factorization& factorization() const { return factorization_; }
  std::size_t size() const { return moduli_.size(); }
  const std::vector<Poly>& moduli() const { return moduli_; }
  const std::vector<Poly>& cofactors() const { return cofactors_; }
  const std::vector<Poly>& inverses() const { return inverses_; }
  // v_l (g / g_l^(e_l)) mod g
  const std::vector<Poly>& idempotents() const { return idempotents_; }

 private:
  void Build();

  Poly g_;
  Factorization factorization_;
  std::vector<Poly> moduli_;
  std::vector<Poly> cofactors_;
  std::vector<Poly> inverses_;
  std::vector<Poly> idempotents_;
};

std::vector<Poly> CrtSplit(const Poly& u, const CrtBasis& basis);
Poly CrtJoin(const std::vector<Poly>& components, const CrtBasis& basis);

// Orbit representatives of R_g from per-factor representatives. For a
// choice (u_1, ..., u_m) with orbit sizes d_l it yields
//   (u_1, x^(k_2) u_2, ..., x^(k_m) u_m),  0 <= k_l < K_l,
//   K_l = gcd(d_l, lcm(d_1, ..., d_(l-1))),
// each with orbit size lcm(d_1, ..., d_m). Choices are indexed in mixed
// radix with the last factor fastest, so disjoint index ranges can be
// processed independently.
class CombinedOrbitEnumerator {
 public:
  CombinedOrbitEnumerator(std::vector<std::vector<OrbitRep>> factor_reps,
                          const CrtBasis& basis);

  std::uint64_t choice_count() const { return choice_count_; }
  // Emitted representatives carry valuation 0; valuations are only
  // meaningful per factor.
  void ForEach(std::uint64_t begin, std::uint64_t end,
               const std::function<void(const OrbitRep&)>& visit) const;
  void ForEach(const std::function<void(const OrbitRep&)>& visit) const {
    ForEach(0, choice_count_, visit);
  }

 private:
  std::vector<std::vector<OrbitRep>> factor_reps_;
  const CrtBasis& basis_;
  std::vector<QuotientRing> factor_rings_;
  std::uint64_t choice_count_ = 1;
};

std::vector<OrbitRep> CombineOrbitReps(std::vector<std::vector<OrbitRep>> factor_reps,
                                       const CrtBasis& basis);

}  // namespace crcw

#endif  // CRCW_CRT_HPP_
