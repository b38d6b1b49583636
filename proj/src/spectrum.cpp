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

#include "crcw/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <thread>

#include "crcw/crt.hpp"
#include "crcw/error.hpp"
#include "crcw/orbit.hpp"

namespace crcw {

WeightDistribution WeightDistribution::FromCounts(std::vector<BigInt> counts) {
  if (counts.empty()) Fail(ErrorCode::kInvalidInput, "weight distribution is empty");
  WeightDistribution w;
  w.n = counts.size() - 1;
  for (const auto& c : counts) {
    if (c < 0) Fail(ErrorCode::kInvalidInput, "negative weight count");
    w.total += c;
  }
  w.counts = std::move(counts);
  return w;
}

namespace {

BigInt BigPow(std::uint64_t base, std::uint64_t e) {
  return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(e));
}

WeightDistribution FromHistogram(const std::vector<std::uint64_t>& hist) {
  std::vector<BigInt> counts(hist.begin(), hist.end());
  return WeightDistribution::FromCounts(std::move(counts));
}

struct Partial {
  std::vector<std::uint64_t> hist;
  std::uint64_t scans = 0;
  std::exception_ptr error;
};

}  // namespace

SpectrumRun DualSpectrum(const CrcCode& code, unsigned threads,
                         std::uint64_t factor_seed) {
  const CrtBasis basis(code.g(), factor_seed);
  std::vector<std::vector<OrbitRep>> factor_reps;
  for (const auto& fp : basis.factorization().factors) {
    factor_reps.push_back(RingOrbitReps(fp.factor, fp.multiplicity));
  }
  const CombinedOrbitEnumerator reps(std::move(factor_reps), basis);

  const std::uint64_t choices = reps.choice_count();
  const unsigned workers = static_cast<unsigned>(
      std::clamp<std::uint64_t>(threads == 0 ? 1 : threads, 1, std::max<std::uint64_t>(choices, 1)));
  std::vector<Partial> parts(workers);
  auto work = [&](unsigned w) {
    Partial& part = parts[w];
    try {
      part.hist.assign(code.n() + 1, 0);
      const std::uint64_t begin = choices / workers * w + std::min<std::uint64_t>(w, choices % workers);
      const std::uint64_t end = begin + choices / workers + (w < choices % workers ? 1 : 0);
      reps.ForEach(begin, end, [&](const OrbitRep& rep) {
        AccumulateWeights(rep.element, code, rep.orbit_size, part.hist);
        ++part.scans;
      });
    } catch (...) {
      part.error = std::current_exception();
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }

  SpectrumRun run;
  std::vector<BigInt> counts(code.n() + 1);
  for (const auto& part : parts) {
    if (part.error) std::rethrow_exception(part.error);
    for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += part.hist[i];
    run.full_scans += part.scans;
  }
  run.representatives = run.full_scans;
  run.spectrum = WeightDistribution::FromCounts(std::move(counts));
  if (run.spectrum.total != BigPow(code.field()->q(), code.r())) {
    Fail(ErrorCode::kInternal, "dual spectrum does not sum to q^r");
  }
  return run;
}

SpectrumRun BruteForceDualSpectrum(const CrcCode& code, std::uint64_t max_exhaustive) {
  const GaloisField& f = *code.field();
  const std::uint32_t r = code.r();
  const std::uint64_t n = code.n();
  const BigInt seeds_big = BigPow(f.q(), r);
  if (seeds_big > max_exhaustive) {
    Fail(ErrorCode::kResource, "q^r = " + seeds_big.str() +
                                   " exceeds the exhaustive guard of " +
                                   std::to_string(max_exhaustive));
  }
  const auto seeds = static_cast<std::uint64_t>(seeds_big);
  std::vector<Fq> neg_g(r);
  for (std::uint32_t j = 0; j < r; ++j) neg_g[j] = f.neg(code.g()[j]);

  std::vector<std::uint64_t> hist(n + 1, 0);
  std::vector<Fq> c(n);
  for (std::uint64_t s = 0; s < seeds; ++s) {
    std::uint64_t rest = s;
    for (std::uint32_t i = 0; i < r; ++i) {
      c[i] = static_cast<Fq>(rest % f.q());
      rest /= f.q();
    }
    // c_i = -g_0 c_(i-r) - ... - g_(r-1) c_(i-1)
    for (std::uint64_t i = r; i < n; ++i) {
      Fq acc = 0;
      for (std::uint32_t j = 0; j < r; ++j) acc = f.add(acc, f.mul(neg_g[j], c[i - r + j]));
      c[i] = acc;
    }
    std::uint64_t w = 0;
    for (std::uint64_t i = 0; i < n; ++i) w += c[i] != 0;
    ++hist[w];
  }
  SpectrumRun run;
  run.spectrum = FromHistogram(hist);
  run.full_scans = seeds;
  run.representatives = seeds;
  return run;
}

WeightDistribution MacWilliamsTransform(const WeightDistribution& w, std::uint32_t q) {
  if (q < 2) Fail(ErrorCode::kParameter, "alphabet size must be at least 2");
  if (w.counts.size() != w.n + 1) Fail(ErrorCode::kParameter, "malformed weight distribution");
  if (w.total == 0) Fail(ErrorCode::kInvalidInput, "empty weight distribution");
  const std::uint64_t n = w.n;
  const BigInt qm1 = q - 1;
  std::vector<BigInt> acc(n + 1);
  std::vector<BigInt> k(n + 1);
  for (std::uint64_t x = 0; x <= n; ++x) {
    if (w.counts[x] == 0) continue;
    // Krawtchouk K_j(x; n, q), j = 0..n.
    k[0] = 1;
    if (n >= 1) k[1] = qm1 * n - BigInt(q) * x;
    for (std::uint64_t j = 1; j < n; ++j) {
      BigInt next = (qm1 * (n - j) + j - BigInt(q) * x) * k[j] - qm1 * (n - j + 1) * k[j - 1];
      k[j + 1] = next / (j + 1);
    }
    for (std::uint64_t j = 0; j <= n; ++j) acc[j] += w.counts[x] * k[j];
  }
  std::vector<BigInt> out(n + 1);
  for (std::uint64_t j = 0; j <= n; ++j) {
    BigInt rem;
    boost::multiprecision::divide_qr(acc[j], w.total, out[j], rem);
    if (rem != 0 || out[j] < 0) {
      Fail(ErrorCode::kInternal, "transform produced a non-integral or negative count at weight " +
                                     std::to_string(j));
    }
  }
  return WeightDistribution::FromCounts(std::move(out));
}

WeightDistribution MacWilliams(const WeightDistribution& dual, const CrcCode& code) {
  const std::uint32_t q = code.field()->q();
  if (dual.n != code.n()) Fail(ErrorCode::kParameter, "spectrum length does not match code");
  if (dual.total != BigPow(q, code.r())) {
    Fail(ErrorCode::kInvalidInput, "dual spectrum must sum to q^r");
  }
  WeightDistribution primal = MacWilliamsTransform(dual, q);
  if (primal.total != BigPow(q, code.n() - code.r())) {
    Fail(ErrorCode::kInternal, "primal spectrum does not sum to q^(n-r)");
  }
  return primal;
}

std::uint64_t MinDistance(const WeightDistribution& spectrum) {
  for (std::uint64_t w = 1; w < spectrum.counts.size(); ++w) {
    if (spectrum.counts[w] > 0) return w;
  }
  Fail(ErrorCode::kUndefinedInput, "minimum distance of the zero code is undefined");
}

double UndetectedErrorProbability(const WeightDistribution& spectrum, double epsilon,
                                  std::uint32_t q) {
  if (!(epsilon >= 0.0 && epsilon <= 1.0)) {
    Fail(ErrorCode::kParameter, "epsilon must lie in [0, 1]");
  }
  if (q < 2) Fail(ErrorCode::kParameter, "alphabet size must be at least 2");
  const std::uint64_t n = spectrum.n;
  if (n == 0) return 0.0;
  const double a = epsilon / static_cast<double>(q - 1);
  const double b = 1.0 - epsilon;
  // a (A_1 b^(n-1) + a (A_2 b^(n-2) + ... + a A_n))
  double t = spectrum.counts[n].convert_to<double>();
  double bp = 1.0;
  for (std::uint64_t i = n - 1; i >= 1; --i) {
    bp *= b;
    t = spectrum.counts[i].convert_to<double>() * bp + a * t;
  }
  return a * t;
}

BigRational UndetectedErrorProbabilityExact(const WeightDistribution& spectrum,
                                            const BigRational& epsilon, std::uint32_t q) {
  if (epsilon < 0 || epsilon > 1) Fail(ErrorCode::kParameter, "epsilon must lie in [0, 1]");
  if (q < 2) Fail(ErrorCode::kParameter, "alphabet size must be at least 2");
  const std::uint64_t n = spectrum.n;
  if (n == 0) return 0;
  const BigRational a = epsilon / (q - 1);
  const BigRational b = 1 - epsilon;
  BigRational t = BigRational(spectrum.counts[n]);
  BigRational bp = 1;
  for (std::uint64_t i = n - 1; i >= 1; --i) {
    bp *= b;
    t = BigRational(spectrum.counts[i]) * bp + a * t;
  }
  return a * t;
}

VerifyReport Verify(const CrcCode& code, std::uint64_t max_exhaustive, unsigned threads,
                    std::uint64_t factor_seed) {
  VerifyReport report;
  report.brute = BruteForceDualSpectrum(code, max_exhaustive);
  report.fast = DualSpectrum(code, threads, factor_seed);
  report.match = report.fast.spectrum == report.brute.spectrum;
  return report;
}

}  // namespace crcw
