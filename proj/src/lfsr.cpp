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

#include "crcw/lfsr.hpp"

#include <sstream>

#include "crcw/error.hpp"

namespace crcw {

CrcCode::CrcCode(Poly g, std::uint64_t n) : g_(std::move(g)), n_(n) {
  if (g_.degree() < 1) {
    Fail(ErrorCode::kInvalidInput, "generator must have degree r > 0");
  }
  if (!g_.is_monic()) Fail(ErrorCode::kInvalidInput, "generator must be monic");
  if (g_[0] == 0) Fail(ErrorCode::kInvalidInput, "generator must satisfy g(0) != 0");
  if (n_ <= static_cast<std::uint64_t>(g_.degree())) {
    std::ostringstream os;
    os << "code length n = " << n_ << " must exceed r = " << g_.degree();
    Fail(ErrorCode::kInvalidInput, os.str());
  }
}

namespace {

void CheckReduced(const Poly& u, const Poly& g) {
  if (u.degree() >= g.degree()) {
    Fail(ErrorCode::kInvalidInput, "initial polynomial must satisfy deg u < deg g");
  }
}

}  // namespace

LrsState::LrsState(const Poly& g, const Poly& u)
    : field_holder_(g.field()),
      field_(g.field().get()),
      r_(static_cast<std::size_t>(g.degree())) {
  if (!g.is_monic() || g.degree() < 1) {
    Fail(ErrorCode::kInvalidInput, "characteristic polynomial must be monic, deg >= 1");
  }
  CheckReduced(u, g);
  neg_low_.resize(r_);
  for (std::size_t i = 0; i < r_; ++i) neg_low_[i] = field_->neg(g[i]);
  cur_.assign(r_, 0);
  for (std::size_t i = 0; i < u.coeffs().size(); ++i) cur_[i] = u[i];
}

Poly LrsState::current() const { return Poly(field_holder_, cur_); }

WindowTracker::WindowTracker(std::uint64_t n) : buffer_(n, 0) {
  if (n == 0) Fail(ErrorCode::kInvalidInput, "window length must be positive");
}

void WindowTracker::Fill(Fq symbol) {
  if (full()) Fail(ErrorCode::kInternal, "window already full");
  buffer_[filled_++] = symbol;
}

std::uint64_t WindowTracker::ScanWeight() {
  std::uint64_t w = 0;
  for (std::size_t i = 0; i < filled_; ++i) w += buffer_[i] != 0;
  weight_ = w;
  return w;
}

std::vector<Fq> WindowTracker::Contents() const {
  std::vector<Fq> out;
  out.reserve(filled_);
  for (std::size_t i = 0; i < filled_; ++i) {
    out.push_back(buffer_[(head_ + i) % buffer_.size()]);
  }
  return out;
}

std::vector<Fq> ExtractWord(const Poly& u, const CrcCode& code, std::uint64_t k) {
  CheckReduced(u, code.g());
  // Shifting the sequence by k is multiplying u by x^k mod g.
  const QuotientRing ring(code.g());
  QuotientRing::Elem start = ring.FromPoly(u);
  if (k > 0) {
    start = ring.Mul(start, ring.Pow(ring.FromPoly(Poly::X(code.field())), k));
  }
  LrsState state(code.g(), ring.ToPoly(start));
  std::vector<Fq> word(code.n());
  for (auto& c : word) c = state.Next();
  return word;
}

std::uint64_t OrbitWordCount(const Poly& u, const Poly& g) {
  CheckReduced(u, g);
  return PolyOrder(PolyDiv(g, PolyGcd(g, u)));
}

std::vector<std::uint64_t> WeightStream(const Poly& u, const CrcCode& code,
                                        std::uint64_t count) {
  if (count == 0) Fail(ErrorCode::kInvalidInput, "count must be at least 1");
  LrsState state(code.g(), u);
  WindowTracker window(code.n());
  while (!window.full()) window.Fill(state.Next());
  std::vector<std::uint64_t> out;
  out.reserve(count);
  out.push_back(window.ScanWeight());
  for (std::uint64_t k = 1; k < count; ++k) {
    window.Slide(state.Next());
    out.push_back(window.weight());
  }
  return out;
}

void AccumulateWeights(const Poly& u, const CrcCode& code, std::uint64_t count,
                       std::vector<std::uint64_t>& histogram) {
  if (histogram.size() != code.n() + 1) {
    Fail(ErrorCode::kParameter, "histogram must have n + 1 bins");
  }
  if (count == 0) return;
  LrsState state(code.g(), u);
  WindowTracker window(code.n());
  while (!window.full()) window.Fill(state.Next());
  ++histogram[window.ScanWeight()];
  for (std::uint64_t k = 1; k < count; ++k) {
    window.Slide(state.Next());
    ++histogram[window.weight()];
  }
}

}  // namespace crcw
