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

// Linear recurring sequences with characteristic polynomial g, and the
// sliding-window weight tracking used to walk the dual code one shift at a
// time.
//
// The sequence attached to u (deg u < deg g) is the expansion
//   u(x)/g(x) = sum_i c_i x^-(i+1).
// It is produced by repeatedly emitting the x^(r-1) coefficient of u and
// replacing u by x*u mod g, and it satisfies
//   c_i = -g_0 c_(i-r) - ... - g_(r-1) c_(i-1),   i >= r.
// Every length-n window of such a sequence is a word of the dual of the
// (n, n-r) CRC code generated by g.

#ifndef CRCW_LFSR_HPP_
#define CRCW_LFSR_HPP_

#include <cstdint>
#include <vector>

#include "crcw/poly.hpp"

namespace crcw {

// An (n, n-r) CRC code: g monic, g(0) != 0, 0 < r = deg g < n.
class CrcCode {
 public:
  // Throws kInvalidInput naming the violated constraint.
  CrcCode(Poly g, std::uint64_t n);

  const Poly& g() const { return g_; }
  std::uint64_t n() const { return n_; }
  std::uint32_t r() const { return static_cast<std::uint32_t>(g_.degree()); }
  const FieldPtr& field() const { return g_.field(); }

 private:
  Poly g_;
  std::uint64_t n_;
};

class LrsState {
 public:
  LrsState(const Poly& g, const Poly& u);

  // Emits the x^(r-1) coefficient of the running polynomial, then advances
  // it to x * current mod g.
  Fq Next() {
    const Fq out = cur_[r_ - 1];
    for (std::size_t i = r_ - 1; i > 0; --i) cur_[i] = cur_[i - 1];
    cur_[0] = 0;
    if (out != 0) {
      for (std::size_t j = 0; j < r_; ++j) {
        cur_[j] = field_->add(cur_[j], field_->mul(out, neg_low_[j]));
      }
    }
    ++emitted_;
    return out;
  }

  Poly current() const;
  std::uint64_t emitted() const { return emitted_; }

 private:
  FieldPtr field_holder_;
  const GaloisField* field_;
  std::size_t r_;
  std::vector<Fq> neg_low_;
  std::vector<Fq> cur_;
  std::uint64_t emitted_ = 0;
};

// Ring buffer over the last n symbols of a stream with its Hamming weight.
class WindowTracker {
 public:
  explicit WindowTracker(std::uint64_t n);

  // Appends during the initial fill; weight is not maintained until
  // ScanWeight() is called on a full window.
  void Fill(Fq symbol);
  bool full() const { return filled_ == buffer_.size(); }
  // Full recount of the window.
  std::uint64_t ScanWeight();
  // Drops the oldest symbol, appends `entering`, and updates the weight in
  // O(1): -1 when a nonzero leaves for a zero, +1 in the reverse case.
  void Slide(Fq entering) {
    const Fq leaving = buffer_[head_];
    buffer_[head_] = entering;
    if (++head_ == buffer_.size()) head_ = 0;
    if (leaving != 0 && entering == 0) {
      --weight_;
    } else if (leaving == 0 && entering != 0) {
      ++weight_;
    }
  }
  std::uint64_t weight() const { return weight_; }
  // Oldest-first contents.
  std::vector<Fq> Contents() const;

 private:
  std::vector<Fq> buffer_;
  std::size_t head_ = 0;
  std::size_t filled_ = 0;
  std::uint64_t weight_ = 0;
};

// (c_k, ..., c_(k+n-1)) from the sequence of u.
std::vector<Fq> ExtractWord(const Poly& u, const CrcCode& code, std::uint64_t k);

// Number of distinct words obtainable from the sequence of u:
// ord(g / gcd(g, u)).
std::uint64_t OrbitWordCount(const Poly& u, const Poly& g);

// wt(c^(0)), ..., wt(c^(count-1)); the first by full scan, the rest by
// sliding.
std::vector<std::uint64_t> WeightStream(const Poly& u, const CrcCode& code,
                                        std::uint64_t count);

// Adds the weights of the `count` consecutive words starting at c^(0) of
// the sequence of u to `histogram` (size n + 1). One full scan.
void AccumulateWeights(const Poly& u, const CrcCode& code, std::uint64_t count,
                       std::vector<std::uint64_t>& histogram);

}  // namespace crcw

#endif  // CRCW_LFSR_HPP_
