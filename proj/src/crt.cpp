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

#include "crcw/crt.hpp"

#include <numeric>

#include "crcw/error.hpp"

namespace crcw {

CrtBasis::CrtBasis(const Poly& g, std::uint64_t seed)
    : CrtBasis(g, Factorize(g, seed)) {}

CrtBasis::CrtBasis(const Poly& g, Factorization factorization)
    : g_(g), factorization_(std::move(factorization)) {
  if (!g_.is_monic() || g_.degree() < 1) {
    Fail(ErrorCode::kInvalidInput, "CRT modulus must be monic of positive degree");
  }
  Build();
}

void CrtBasis::Build() {
  for (const auto& [factor, e] : factorization_.factors) {
    Poly m = PolyPow(factor, e);
    Poly cof = PolyDiv(g_, m);
    Poly v = PolyInverseMod(cof, m);
    idempotents_.push_back(PolyMod(v * cof, g_));
    moduli_.push_back(std::move(m));
    cofactors_.push_back(std::move(cof));
    inverses_.push_back(std::move(v));
  }
  Poly sum(g_.field());
  for (const auto& w : idempotents_) sum = sum + w;
  if (!PolyMod(sum, g_).is_one()) {
    Fail(ErrorCode::kInternal, "CRT idempotents do not sum to 1");
  }
}

std::vector<Poly> CrtSplit(const Poly& u, const CrtBasis& basis) {
  std::vector<Poly> out;
  out.reserve(basis.size());
  for (const auto& m : basis.moduli()) out.push_back(PolyMod(u, m));
  return out;
}

Poly CrtJoin(const std::vector<Poly>& components, const CrtBasis& basis) {
  if (components.size() != basis.size()) {
    Fail(ErrorCode::kParameter, "component count does not match CRT basis");
  }
  Poly acc(basis.g().field());
  for (std::size_t l = 0; l < components.size(); ++l) {
    acc = acc + components[l] * basis.idempotents()[l];
  }
  return PolyMod(acc, basis.g());
}

CombinedOrbitEnumerator::CombinedOrbitEnumerator(
    std::vector<std::vector<OrbitRep>> factor_reps, const CrtBasis& basis)
    : factor_reps_(std::move(factor_reps)), basis_(basis) {
  if (factor_reps_.size() != basis_.size()) {
    Fail(ErrorCode::kParameter, "one representative list per factor is required");
  }
  for (std::size_t l = 0; l < factor_reps_.size(); ++l) {
    if (factor_reps_[l].empty()) {
      Fail(ErrorCode::kInvalidInput, "factor representative list is empty");
    }
    factor_rings_.emplace_back(basis_.moduli()[l]);
    const unsigned __int128 c =
        static_cast<unsigned __int128>(choice_count_) * factor_reps_[l].size();
    if (c > UINT64_MAX) Fail(ErrorCode::kResource, "too many orbit choices");
    choice_count_ = static_cast<std::uint64_t>(c);
  }
}

void CombinedOrbitEnumerator::ForEach(
    std::uint64_t begin, std::uint64_t end,
    const std::function<void(const OrbitRep&)>& visit) const {
  const std::size_t m = factor_reps_.size();
  std::vector<std::size_t> pick(m);
  std::vector<std::uint64_t> bound(m, 1);
  std::vector<std::uint64_t> shift(m, 0);
  std::vector<QuotientRing::Elem> comp(m);
  std::vector<Poly> parts(m, Poly(basis_.g().field()));
  for (std::uint64_t choice = begin; choice < end && choice < choice_count_; ++choice) {
    std::uint64_t rest = choice;
    for (std::size_t l = m; l-- > 0;) {
      pick[l] = static_cast<std::size_t>(rest % factor_reps_[l].size());
      rest /= factor_reps_[l].size();
    }
    // K_l and the combined orbit size.
    std::uint64_t lcm = factor_reps_[0][pick[0]].orbit_size;
    for (std::size_t l = 1; l < m; ++l) {
      const std::uint64_t d = factor_reps_[l][pick[l]].orbit_size;
      bound[l] = std::gcd(d, lcm);
      lcm = lcm / bound[l] * d;
    }
    for (std::size_t l = 0; l < m; ++l) {
      comp[l] = factor_rings_[l].FromPoly(factor_reps_[l][pick[l]].element);
      shift[l] = 0;
    }
    // Odometer over (k_2, ..., k_m), last fastest.
    for (;;) {
      for (std::size_t l = 0; l < m; ++l) parts[l] = factor_rings_[l].ToPoly(comp[l]);
      visit(OrbitRep{CrtJoin(parts, basis_), lcm, 0});
      std::size_t l = m;
      bool done = true;
      while (l-- > 1) {
        factor_rings_[l].MulXInPlace(comp[l]);
        if (++shift[l] < bound[l]) {
          done = false;
          break;
        }
        // Back to the unshifted representative.
        shift[l] = 0;
        comp[l] = factor_rings_[l].FromPoly(factor_reps_[l][pick[l]].element);
      }
      if (done) break;
    }
  }
}

std::vector<OrbitRep> CombineOrbitReps(std::vector<std::vector<OrbitRep>> factor_reps,
                                       const CrtBasis& basis) {
  CombinedOrbitEnumerator e(std::move(factor_reps), basis);
  std::vector<OrbitRep> out;
  e.ForEach([&out](const OrbitRep& rep) { out.push_back(rep); });
  return out;
}

}  // namespace crcw
