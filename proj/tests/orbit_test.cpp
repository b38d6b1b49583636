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

#include <set>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "test_util.hpp"

namespace crcw {
namespace {

class OrbitTest : public ::testing::Test {
 protected:
  Poly P(std::vector<Fq> c) const { return Poly(f2_, std::move(c)); }

  FieldPtr f2_ = GaloisField::Create(2, 1);
  Poly x1_ = P({1, 1});
  Poly x2_ = P({1, 1, 1});
  Poly x3_ = P({1, 1, 0, 1});
};

TEST_F(OrbitTest, GAdicDigits) {
  GAdicForm a = GAdicDigits(x2_, x2_, 3);
  ASSERT_EQ(a.digits.size(), 3u);
  EXPECT_TRUE(a.digits[0].is_zero());
  EXPECT_EQ(a.digits[1], P({1}));
  EXPECT_TRUE(a.digits[2].is_zero());
  EXPECT_FALSE(a.invertible());

  GAdicForm b = GAdicDigits(P({0, 1}), x1_, 2);
  EXPECT_EQ(b.digits[0], P({1}));
  EXPECT_EQ(b.digits[1], P({1}));
  EXPECT_TRUE(b.invertible());

  GAdicForm z = GAdicDigits(P({}), x2_, 2);
  for (const auto& d : z.digits) EXPECT_TRUE(d.is_zero());

  auto f3 = GaloisField::Create(3, 1);
  const Poly g(f3, {2, 1, 1});
  for (std::uint64_t c = 0; c < 729; ++c) {
    const Poly f = Poly::FromCode(f3, c);
    GAdicForm form = GAdicDigits(f, g, 3);
    for (const auto& d : form.digits) EXPECT_LT(d.degree(), 2);
    EXPECT_EQ(FromGAdic(form, g), f);
  }
}

TEST_F(OrbitTest, UnitGroupOrderExamples) {
  EXPECT_EQ(UnitGroupOrder(x3_, 1), 7);
  EXPECT_EQ(UnitGroupOrder(x2_, 2), 12);
  EXPECT_EQ(UnitGroupOrder(x1_, 1), 1);
}

TEST_F(OrbitTest, SylowGeneratorExamples) {
  auto a = SylowGenerators(x1_, 2);
  ASSERT_EQ(a.size(), 1u);
  EXPECT_EQ(a[0].poly, P({0, 1}));
  EXPECT_EQ(a[0].order, 2u);

  auto b = SylowGenerators(x2_, 2);
  ASSERT_EQ(b.size(), 2u);
  EXPECT_EQ(b[0].poly, P({0, 1, 1}));     // 1 + g
  EXPECT_EQ(b[0].order, 2u);
  EXPECT_EQ(b[1].poly, P({1, 1, 1, 1}));  // 1 + x g
  EXPECT_EQ(b[1].order, 2u);
  EXPECT_EQ(b[1].j, 1u);

  auto c = SylowGenerators(x1_, 3);
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0].k, 1u);
  EXPECT_EQ(c[0].order, 4u);

  EXPECT_CRCW_ERROR(SylowGenerators(x1_, 1), ErrorCode::kInvalidInput);
}

TEST_F(OrbitTest, SylowDecomposeExamples) {
  for (auto c : SylowDecompose(P({1}), x2_, 2)) EXPECT_EQ(c, 0u);
  EXPECT_EQ(SylowDecompose(P({0, 0, 0, 1}), x2_, 2), (std::vector<std::uint64_t>{1, 1}));
  const auto gens = SylowGenerators(x3_, 3);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const auto c = SylowDecompose(gens[i].poly, x3_, 3);
    for (std::size_t j = 0; j < c.size(); ++j) EXPECT_EQ(c[j], i == j ? 1u : 0u);
  }
  EXPECT_CRCW_ERROR(SylowDecompose(P({0, 1}), x2_, 2), ErrorCode::kInvalidInput);
}

TEST_F(OrbitTest, SplitXExamples) {
  XSplit a = SplitX(x1_, 2);
  EXPECT_EQ(a.x_p, P({0, 1}));
  EXPECT_EQ(a.i0, 0u);
  EXPECT_EQ(a.j0, 0u);

  XSplit b = SplitX(x2_, 2);
  EXPECT_EQ(b.x_p, P({0, 0, 0, 1}));
  EXPECT_EQ(b.i0, 0u);
  EXPECT_EQ(b.j0, 0u);

  XSplit c = SplitX(x3_, 2);
  EXPECT_EQ(c.x_p, PolyPowMod(P({0, 1}), 7, PolyPow(x3_, 2)));
  const auto gens = SylowGenerators(x3_, 2);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].k != 1) continue;
    const bool before = gens[i].i < c.i0 || (gens[i].i == c.i0 && gens[i].j < c.j0);
    if (before) EXPECT_EQ(c.x_p_exponents[i] % 2, 0u);
    if (gens[i].i == c.i0 && gens[i].j == c.j0) EXPECT_EQ(c.x_p_exponents[i] % 2, 1u);
  }
}

TEST_F(OrbitTest, UnitOrbitRepExamples) {
  auto a = UnitOrbitReps(x3_, 1);
  ASSERT_EQ(a.size(), 1u);
  EXPECT_EQ(a[0].element, P({1}));
  EXPECT_EQ(a[0].orbit_size, 7u);

  auto b = UnitOrbitReps(x2_, 2);
  ASSERT_EQ(b.size(), 2u);
  EXPECT_EQ(b[0].element, P({1}));
  EXPECT_EQ(b[1].element, P({1, 1, 1, 1}));
  EXPECT_EQ(b[0].orbit_size, 6u);
  EXPECT_EQ(b[1].orbit_size, 6u);

  auto c = UnitOrbitReps(x1_, 2);
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0].element, P({1}));
  EXPECT_EQ(c[0].orbit_size, 2u);
}

TEST_F(OrbitTest, RingOrbitRepExamples) {
  auto a = RingOrbitReps(x3_, 1);
  ASSERT_EQ(a.size(), 2u);
  EXPECT_TRUE(a[0].element.is_zero());
  EXPECT_EQ(a[0].orbit_size, 1u);
  EXPECT_EQ(a[1].element, P({1}));
  EXPECT_EQ(a[1].orbit_size, 7u);

  auto b = RingOrbitReps(x1_, 2);
  ASSERT_EQ(b.size(), 3u);
  EXPECT_EQ(b[1].element, x1_);
  EXPECT_EQ(b[1].orbit_size, 1u);
  EXPECT_EQ(b[2].element, P({1}));
  EXPECT_EQ(b[2].orbit_size, 2u);

  auto c = RingOrbitReps(x2_, 2);
  ASSERT_EQ(c.size(), 4u);
  EXPECT_EQ(c[1].element, x2_);
  EXPECT_EQ(c[1].orbit_size, 3u);
  EXPECT_EQ(c[1].valuation, 1u);
  EXPECT_EQ(c[2].element, P({1}));
  EXPECT_EQ(c[3].element, P({1, 1, 1, 1}));
  std::uint64_t total = 0;
  for (const auto& r : c) total += r.orbit_size;
  EXPECT_EQ(total, 16u);
}

// For every irreducible g and l with q^(rl) small: the unit group order,
// the order of x, the rep count, transversal closure, generator orders and
// decomposition round trip, all against brute force.
TEST_F(OrbitTest, TransversalAgainstBruteForce) {
  for (auto [p, d] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
           {2, 1}, {3, 1}, {2, 2}, {5, 1}, {2, 3}}) {
    auto f = GaloisField::Create(p, d);
    for (std::uint32_t r = 1; r <= 4; ++r) {
      for (const auto& gc : oracle::Irreducibles(*f, r)) {
        for (std::uint32_t l = 1; l <= 4; ++l) {
          const std::uint64_t size = CheckedPow(f->q(), static_cast<std::uint64_t>(r) * l);
          if (size > 4096) break;
          const Poly g(f, gc);
          const oracle::Vec m = oracle::Power(*f, gc, l);
          SCOPED_TRACE(g.ToString() + " l=" + std::to_string(l));

          const std::uint64_t units = oracle::UnitCount(*f, m);
          EXPECT_EQ(UnitGroupOrder(g, l), units);
          const std::uint64_t ordx = oracle::OrderOfX(*f, m);
          EXPECT_EQ(UnitOrbitSize(g, l), ordx);

          const auto reps = UnitOrbitReps(g, l);
          EXPECT_EQ(reps.size() * ordx, units);
          const auto label = oracle::OrbitLabels(*f, m);
          std::set<std::uint32_t> seen;
          for (const auto& rep : reps) {
            ASSERT_LT(rep.element.degree(), static_cast<int>(r * l));
            EXPECT_EQ(oracle::Gcd(*f, rep.element.coeffs(), m), oracle::Vec{1});
            EXPECT_EQ(rep.orbit_size, ordx);
            EXPECT_TRUE(seen.insert(label[oracle::Encode(f->q(), rep.element.coeffs())]).second);
          }

          if (l < 2) continue;
          const auto gens = SylowGenerators(g, l);
          for (const auto& a : gens) {
            EXPECT_EQ(oracle::Mod(*f, a.poly.coeffs(), gc), oracle::Vec{1});
            EXPECT_EQ(oracle::ElementOrder(*f, a.poly.coeffs(), m), a.order);
          }
          const QuotientRing ring(Poly(f, m));
          for (std::uint64_t c = 0; c < size; ++c) {
            oracle::Vec e = oracle::Decode(f->q(), c, r * l);
            if (oracle::Mod(*f, e, gc) != oracle::Vec{1}) continue;
            const auto exps = SylowDecompose(Poly(f, e), g, l);
            QuotientRing::Elem acc = ring.One();
            for (std::size_t i = 0; i < gens.size(); ++i) {
              ASSERT_LT(exps[i], gens[i].order);
              acc = ring.Mul(acc, ring.Pow(ring.FromPoly(gens[i].poly), exps[i]));
            }
            ASSERT_EQ(ring.ToPoly(acc), Poly(f, e));
          }
        }
      }
    }
  }
}

TEST_F(OrbitTest, RingRepsCoverEveryOrbit) {
  for (auto [p, d] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 1}, {3, 1}, {2, 2}}) {
    auto f = GaloisField::Create(p, d);
    for (std::uint32_t r = 1; r <= 3; ++r) {
      for (const auto& gc : oracle::Irreducibles(*f, r)) {
        for (std::uint32_t t = 1; t <= 4; ++t) {
          if (CheckedPow(f->q(), static_cast<std::uint64_t>(r) * t) > 4096) break;
          const oracle::Vec m = oracle::Power(*f, gc, t);
          const auto label = oracle::OrbitLabels(*f, m);
          std::set<std::uint32_t> all(label.begin(), label.end());
          std::set<std::uint32_t> seen;
          std::uint64_t total = 0;
          for (const auto& rep : RingOrbitReps(Poly(f, gc), t)) {
            EXPECT_TRUE(seen.insert(label[oracle::Encode(f->q(), rep.element.coeffs())]).second);
            total += rep.orbit_size;
          }
          EXPECT_EQ(seen, all);
          EXPECT_EQ(total, label.size());
        }
      }
    }
  }
}

TEST_F(OrbitTest, EnumeratorSeekMatchesSequential) {
  UnitOrbitEnumerator e(x2_, 4);
  std::vector<Poly> seq;
  OrbitRep rep{P({}), 0, 0};
  while (e.Next(rep)) seq.push_back(rep.element);
  ASSERT_EQ(seq.size(), e.count());
  for (std::uint64_t i = 0; i < seq.size(); i += 3) {
    EXPECT_EQ(e.At(i), seq[i]);
    e.Seek(i);
    ASSERT_TRUE(e.Next(rep));
    EXPECT_EQ(rep.element, seq[i]);
  }
}

TEST_F(OrbitTest, RejectsReducibleModulus) {
  EXPECT_CRCW_ERROR(UnitOrbitEnumerator(P({1, 0, 1}), 2), ErrorCode::kInvalidInput);
}

}  // namespace
}  // namespace crcw
