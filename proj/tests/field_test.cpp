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

#include "crcw/field.hpp"

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "test_util.hpp"

namespace crcw {
namespace {

TEST(FieldTest, SmallFieldExamples) {
  auto f2 = GaloisField::Create(2, 1);
  auto f3 = GaloisField::Create(3, 1);
  auto f4 = GaloisField::Create(2, 2);
  ASSERT_EQ(f4->modulus(), (std::vector<std::uint32_t>{1, 1, 1}));
  const Fq alpha = 2, alpha1 = 3;

  EXPECT_EQ(f2->add(1, 1), 0u);
  EXPECT_EQ(f3->add(2, 2), 1u);
  EXPECT_EQ(f4->add(alpha, alpha1), 1u);
  EXPECT_EQ(f4->mul(alpha, alpha), alpha1);
  EXPECT_EQ(f3->mul(2, 2), 1u);
  EXPECT_EQ(f3->inv(2), 2u);
  EXPECT_EQ(f4->inv(alpha), alpha1);
  EXPECT_EQ(f4->inv(1), 1u);
  EXPECT_EQ(f4->pow(alpha, 3), 1u);
  EXPECT_EQ(f4->pow(alpha, 1), alpha);
  EXPECT_EQ(f2->pow(1, 12345), 1u);
}

TEST(FieldTest, ElementInterface) {
  auto f4 = GaloisField::Create(2, 2);
  FqElement a = FqElement::FromCoeffs(f4, {0, 1});
  FqElement b = FqElement::FromCoeffs(f4, {1, 1});
  EXPECT_EQ(FqAdd(a, b), FqElement(f4, 1));
  EXPECT_EQ(FqMul(a, a), b);
  EXPECT_EQ(FqInv(a), b);
  EXPECT_EQ(FqPow(a, 3), FqElement(f4, 1));
  EXPECT_EQ(a.coeffs(), (std::vector<std::uint32_t>{0, 1}));

  auto f3 = GaloisField::Create(3, 1);
  EXPECT_CRCW_ERROR(FqAdd(a, FqElement(f3, 1)), ErrorCode::kParameter);
  EXPECT_CRCW_ERROR(FqMul(a, FqElement(f3, 1)), ErrorCode::kParameter);
  EXPECT_CRCW_ERROR(FqInv(FqElement(f4, 0)), ErrorCode::kDivisionByZero);
  EXPECT_CRCW_ERROR(FqPow(FqElement(f4, 0), 0), ErrorCode::kUndefinedInput);
  EXPECT_EQ(FqPow(FqElement(f4, 0), 3), FqElement(f4, 0));
  EXPECT_EQ(FqPow(a, 0), FqElement(f4, 1));
}

TEST(FieldTest, RejectsBadParameters) {
  EXPECT_CRCW_ERROR(GaloisField::Create(4, 1), ErrorCode::kParameter);
  EXPECT_CRCW_ERROR(GaloisField::Create(2, 0), ErrorCode::kParameter);
  EXPECT_CRCW_ERROR(GaloisField::Create(2, 17), ErrorCode::kParameter);
  EXPECT_CRCW_ERROR(GaloisField::Create(3, 11), ErrorCode::kParameter);
  // x^2 + 1 = (x + 1)^2 over F_2
  EXPECT_CRCW_ERROR(GaloisField::Create(2, 2, {1, 0, 1}), ErrorCode::kParameter);
  EXPECT_CRCW_ERROR(GaloisField::Create(2, 2, {1, 1}), ErrorCode::kParameter);
  EXPECT_NO_THROW(GaloisField::Create(2, 16));
  EXPECT_NO_THROW(GaloisField::Create(65521, 1));
}

TEST(FieldTest, DefaultModulusIsLeastIrreducible) {
  EXPECT_EQ(GaloisField::Create(2, 3)->modulus(), (std::vector<std::uint32_t>{1, 1, 0, 1}));
  EXPECT_EQ(GaloisField::Create(3, 2)->modulus(), (std::vector<std::uint32_t>{1, 0, 1}));
  EXPECT_EQ(GaloisField::Create(2, 4)->modulus(), (std::vector<std::uint32_t>{1, 1, 0, 0, 1}));
}

// Axioms checked exhaustively on every field with q <= 16, and
// multiplication against schoolbook reduction for q <= 256.
TEST(FieldTest, AxiomsExhaustive) {
  for (auto [p, d] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
           {2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}, {11, 1}, {13, 1}, {2, 4}}) {
    auto f = GaloisField::Create(p, d);
    const Fq q = f->q();
    ASSERT_LE(q, 16u);
    for (Fq a = 0; a < q; ++a) {
      EXPECT_EQ(f->add(a, 0), a);
      EXPECT_EQ(f->mul(a, 1), a);
      EXPECT_EQ(f->add(a, f->neg(a)), 0u);
      if (a != 0) EXPECT_EQ(f->mul(a, f->inv(a)), 1u);
      if (a != 0) EXPECT_EQ(f->pow(a, q - 1), 1u);
      EXPECT_EQ(f->pow(f->pth_root(a), p), a);
      for (Fq b = 0; b < q; ++b) {
        EXPECT_EQ(f->add(a, b), f->add(b, a));
        EXPECT_EQ(f->mul(a, b), f->mul(b, a));
        EXPECT_EQ(f->sub(f->add(a, b), b), a);
        for (Fq c = 0; c < q; ++c) {
          EXPECT_EQ(f->mul(a, f->mul(b, c)), f->mul(f->mul(a, b), c));
          EXPECT_EQ(f->add(a, f->add(b, c)), f->add(f->add(a, b), c));
          EXPECT_EQ(f->mul(a, f->add(b, c)), f->add(f->mul(a, b), f->mul(a, c)));
        }
      }
    }
  }
}

TEST(FieldTest, MultiplicationMatchesSchoolbook) {
  for (auto [p, d] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
           {2, 5}, {2, 8}, {3, 3}, {5, 2}, {3, 4}, {7, 2}}) {
    auto f = GaloisField::Create(p, d);
    for (Fq a = 0; a < f->q(); ++a) {
      for (Fq b = 0; b < f->q(); ++b) {
        ASSERT_EQ(f->mul(a, b), oracle::SchoolbookMul(p, f->modulus(), a, b))
            << f->ToString() << " " << a << "*" << b;
      }
    }
  }
}

TEST(FieldTest, DigitsRoundTrip) {
  auto f = GaloisField::Create(3, 3);
  for (Fq a = 0; a < f->q(); ++a) EXPECT_EQ(f->from_digits(f->digits(a)), a);
  EXPECT_EQ(f->alpha_power(2), 9u);
  EXPECT_EQ(f->ToString(), "GF(3^3)");
}

}  // namespace
}  // namespace crcw
