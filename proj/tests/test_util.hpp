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

#ifndef CRCW_TESTS_TEST_UTIL_HPP_
#define CRCW_TESTS_TEST_UTIL_HPP_

#include <gtest/gtest.h>

#include "crcw/error.hpp"

#define EXPECT_CRCW_ERROR(statement, expected_code)                        \
  do {                                                                     \
    bool crcw_thrown_ = false;                                             \
    try {                                                                  \
      statement;                                                           \
    } catch (const ::crcw::Error& crcw_e_) {                               \
      crcw_thrown_ = true;                                                 \
      EXPECT_EQ(crcw_e_.code(), expected_code) << crcw_e_.what();          \
    }                                                                      \
    EXPECT_TRUE(crcw_thrown_) << "no crcw::Error from " #statement;        \
  } while (0)

#endif  // CRCW_TESTS_TEST_UTIL_HPP_
