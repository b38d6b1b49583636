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

#include "crcw/job.hpp"

#include <sstream>

#include <gtest/gtest.h>

#include "json.hpp"
#include "test_util.hpp"

namespace crcw {
namespace {

using nlohmann::ordered_json;

std::vector<std::string> Lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

TEST(ParsePolySpecTest, CoefficientList) {
  auto f2 = GaloisField::Create(2, 1);
  EXPECT_EQ(ParsePolySpec("1,1,0,1", f2), Poly(f2, {1, 1, 0, 1}));
  auto f4 = GaloisField::Create(2, 2);
  EXPECT_EQ(ParsePolySpec("3,0,1", f4), Poly(f4, {3, 0, 1}));
}

TEST(ParsePolySpecTest, Hex) {
  auto f2 = GaloisField::Create(2, 1);
  EXPECT_EQ(ParsePolySpec("0x3", f2, 2), Poly(f2, {1, 1, 1}));
  const Poly crc32 = ParsePolySpec("0x04C11DB7", f2, 32);
  EXPECT_EQ(crc32.degree(), 32);
  EXPECT_EQ(crc32[0], 1u);
  std::vector<Fq> expected(33, 0);
  for (int e : {0, 1, 2, 4, 5, 7, 8, 10, 11, 12, 16, 22, 23, 26, 32}) expected[e] = 1;
  EXPECT_EQ(crc32, Poly(f2, expected));
  EXPECT_EQ(ParsePolySpec("0x07", f2, 8), Poly(f2, {1, 1, 1, 0, 0, 0, 0, 0, 1}));
}

TEST(ParsePolySpecTest, ErrorsNamePosition) {
  auto f2 = GaloisField::Create(2, 1);
  auto f3 = GaloisField::Create(3, 1);
  auto message = [](auto fn) -> std::string {
    try {
      fn();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kParse);
      return e.what();
    }
    ADD_FAILURE() << "no error";
    return "";
  };
  EXPECT_NE(message([&] { ParsePolySpec("1,2,1", f2); }).find("position 2"), std::string::npos);
  EXPECT_NE(message([&] { ParsePolySpec("1,,1", f2); }).find("position 2"), std::string::npos);
  EXPECT_NE(message([&] { ParsePolySpec("1,1;", f2); }).find("position 3"), std::string::npos);
  EXPECT_NE(message([&] { ParsePolySpec("0x1G", f2, 8); }).find("position 3"), std::string::npos);
  EXPECT_NE(message([&] { ParsePolySpec("0x1FF", f2, 8); }).find("position 2"), std::string::npos);
  EXPECT_CRCW_ERROR(ParsePolySpec("0x07", f2), ErrorCode::kParse);
  EXPECT_CRCW_ERROR(ParsePolySpec("0x07", f3, 8), ErrorCode::kParse);
  EXPECT_CRCW_ERROR(ParsePolySpec("", f2), ErrorCode::kParse);
  EXPECT_CRCW_ERROR(ParsePolySpec("1,1", f2, 4), ErrorCode::kParse);
}

TEST(ParseLengthRangeTest, Forms) {
  EXPECT_EQ(ParseLengthRange("7"), (std::pair<std::uint64_t, std::uint64_t>{7, 7}));
  EXPECT_EQ(ParseLengthRange("4..9"), (std::pair<std::uint64_t, std::uint64_t>{4, 9}));
  EXPECT_CRCW_ERROR(ParseLengthRange("9..4"), ErrorCode::kParse);
  EXPECT_CRCW_ERROR(ParseLengthRange("x"), ErrorCode::kParse);
  EXPECT_CRCW_ERROR(ParseLengthRange("4..5x"), ErrorCode::kParse);
}

JobSpec HammingJob() {
  JobSpec job;
  job.poly = "1,1,0,1";
  job.n_first = job.n_last = 7;
  return job;
}

TEST(RunJobTest, ComputeReport) {
  JobSpec job = HammingJob();
  job.epsilons = {0.0, 0.5};
  const std::string text = RenderJson(RunJob(job));
  const auto lines = Lines(text);
  ASSERT_EQ(lines.size(), 1u);
  const ordered_json j = ordered_json::parse(lines[0]);
  EXPECT_EQ(j["B"], ordered_json::parse("[1,0,0,0,7,0,0,0]"));
  EXPECT_EQ(j["A"], ordered_json::parse("[1,0,0,7,7,0,0,1]"));
  EXPECT_EQ(j["d_min"], 3);
  EXPECT_EQ(j["r"], 3);
  EXPECT_EQ(j["g"], ordered_json::parse("[1,1,0,1]"));
  EXPECT_EQ(j["field_modulus"], ordered_json::parse("[0,1]"));
  EXPECT_EQ(j["full_scans_fast"], 2);
  EXPECT_TRUE(j["full_scans_brute"].is_null());
  EXPECT_EQ(j["P_ue"][0]["value"].get<double>(), 0.0);
  EXPECT_NEAR(j["P_ue"][1]["value"].get<double>(), 15.0 / 128.0, 1e-12);
  EXPECT_EQ(j["mode"], "compute");

  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"p", "delta", "field_modulus", "g", "n", "r", "B", "A",
                                            "d_min", "full_scans_fast", "full_scans_brute", "P_ue",
                                            "mode", "factor_seed"}));
}

TEST(RunJobTest, VerifyReport) {
  JobSpec job = HammingJob();
  job.mode = JobMode::kVerify;
  const JobResult res = RunJob(job);
  EXPECT_TRUE(res.all_match());
  const ordered_json j = ordered_json::parse(Lines(RenderJson(res))[0]);
  EXPECT_EQ(j["full_scans_fast"], 2);
  EXPECT_EQ(j["full_scans_brute"], 8);
  EXPECT_EQ(j["match"], true);
}

TEST(RunJobTest, JsonRoundTripIsByteIdentical) {
  JobSpec job;
  job.p = 3;
  job.poly = "2,1,1";
  job.n_first = 3;
  job.n_last = 60;
  job.epsilons = {0.1, 1.0 / 3.0, 2.0 / 3.0};
  const std::string text = RenderJson(RunJob(job));
  const auto lines = Lines(text);
  ASSERT_EQ(lines.size(), 58u);
  bool saw_string = false;
  for (const auto& line : lines) {
    const ordered_json j = ordered_json::parse(line);
    EXPECT_EQ(j.dump(), line);
    for (const auto& a : j["A"]) saw_string |= a.is_string();
  }
  // Counts near 3^58 exceed 64 bits and are carried as decimal strings.
  EXPECT_TRUE(saw_string);
}

TEST(RunJobTest, ThreadCountDoesNotChangeOutput) {
  JobSpec job;
  job.poly = "1,0,1,1,1,1,0,0,1";  // degree 8, composite
  job.n_first = 9;
  job.n_last = 20;
  job.mode = JobMode::kVerify;
  const std::string one = RenderJson(RunJob(job));
  job.threads = 4;
  EXPECT_EQ(RenderJson(RunJob(job)), one);
  job.output = OutputFormat::kCsv;
  EXPECT_EQ(RenderCsv(RunJob(job)), [&] {
    job.threads = 1;
    return RenderCsv(RunJob(job));
  }());
}

TEST(RunJobTest, Csv) {
  JobSpec job = HammingJob();
  const auto lines = Lines(RenderCsv(RunJob(job)));
  ASSERT_EQ(lines.size(), 9u);
  EXPECT_EQ(lines[0], "n,weight,B,A");
  EXPECT_EQ(lines[4], "7,3,0,7");
  EXPECT_EQ(lines[5], "7,4,7,7");
}

TEST(RunJobTest, RejectsBadLengthsBeforeRunning) {
  JobSpec job = HammingJob();
  job.n_first = 3;
  job.n_last = 7;
  try {
    RunJob(job);
    ADD_FAILURE() << "no error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidInput);
    EXPECT_NE(std::string(e.what()).find("must exceed r"), std::string::npos);
  }
  job = HammingJob();
  job.poly = "0,1,1";
  EXPECT_CRCW_ERROR(RunJob(job), ErrorCode::kInvalidInput);
  job = HammingJob();
  job.epsilons = {2.0};
  EXPECT_CRCW_ERROR(RunJob(job), ErrorCode::kParameter);
}

TEST(RunJobTest, BruteGuard) {
  JobSpec job;
  job.poly = "0x04C11DB7";
  job.width = 32;
  job.n_first = job.n_last = 40;
  job.mode = JobMode::kBrute;
  EXPECT_CRCW_ERROR(RunJob(job), ErrorCode::kResource);
  job.mode = JobMode::kVerify;
  EXPECT_CRCW_ERROR(RunJob(job), ErrorCode::kResource);
}

}  // namespace
}  // namespace crcw
