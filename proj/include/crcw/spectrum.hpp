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

#ifndef CRCW_SPECTRUM_HPP_
#define CRCW_SPECTRUM_HPP_

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "crcw/lfsr.hpp"
#include "crcw/poly.hpp"

namespace crcw {

using BigRational = boost::multiprecision::cpp_rational;

// counts[w] = number of words of Hamming weight w, w = 0..n.
struct WeightDistribution {
  std::vector<BigInt> counts;
  std::uint64_t n = 0;
  BigInt total;

  static WeightDistribution FromCounts(std::vector<BigInt> counts);
  bool operator==(const WeightDistribution& o) const {
    return n == o.n && counts == o.counts;
  }
};

struct SpectrumRun {
  WeightDistribution spectrum;
  std::uint64_t full_scans = 0;
  std::uint64_t representatives = 0;
};

constexpr std::uint64_t kDefaultMaxExhaustive = std::uint64_t{1} << 24;

// Dual spectrum through orbit representatives. Every representative costs
// one full weight scan; the rest of its orbit is covered by sliding the
// window. `threads` partitions the representative index space.
SpectrumRun DualSpectrum(const CrcCode& code, unsigned threads = 1,
                         std::uint64_t factor_seed = kDefaultFactorSeed);

// Enumerates all q^r seeds of the recurrence. kResource if q^r exceeds
// `max_exhaustive`.
SpectrumRun BruteForceDualSpectrum(const CrcCode& code,
                                   std::uint64_t max_exhaustive = kDefaultMaxExhaustive);

// W'[k] = (1 / sum W) sum_w W[w] K_k(w; n, q). Non-integral or negative
// output raises kInternal.
WeightDistribution MacWilliamsTransform(const WeightDistribution& w, std::uint32_t q);

// Primal spectrum from the dual spectrum of `code`.
WeightDistribution MacWilliams(const WeightDistribution& dual, const CrcCode& code);

std::uint64_t MinDistance(const WeightDistribution& spectrum);

// sum_(i>=1) A_i (eps/(q-1))^i (1-eps)^(n-i)
double UndetectedErrorProbability(const WeightDistribution& spectrum, double epsilon,
                                  std::uint32_t q);
BigRational UndetectedErrorProbabilityExact(const WeightDistribution& spectrum,
                                            const BigRational& epsilon, std::uint32_t q);

struct VerifyReport {
  SpectrumRun fast;
  SpectrumRun brute;
  bool match = false;
};

VerifyReport Verify(const CrcCode& code,
                    std::uint64_t max_exhaustive = kDefaultMaxExhaustive,
                    unsigned threads = 1,
                    std::uint64_t factor_seed = kDefaultFactorSeed);

}  // namespace crcw

#endif  // CRCW_SPECTRUM_HPP_
