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

#ifndef CRCW_JOB_HPP_
#define CRCW_JOB_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "crcw/field.hpp"
#include "crcw/poly.hpp"
#include "crcw/spectrum.hpp"

namespace crcw {

enum class JobMode { kCompute, kBrute, kVerify };
enum class OutputFormat { kJson, kCsv };

JobMode ParseJobMode(std::string_view text);
OutputFormat ParseOutputFormat(std::string_view text);
const char* JobModeName(JobMode mode);

struct JobSpec {
  std::uint32_t p = 2;
  std::uint32_t delta = 1;
  std::optional<std::string> field_modulus;  // "c0,...,c_delta" over F_p
  std::string poly;                          // "c0,...,cr" or "0x..." hex
  std::optional<std::uint32_t> width;        // required for hex
  std::uint64_t n_first = 0;
  std::uint64_t n_last = 0;
  JobMode mode = JobMode::kCompute;
  std::vector<double> epsilons;
  OutputFormat output = OutputFormat::kJson;
  unsigned threads = 1;
  std::uint64_t max_exhaustive = kDefaultMaxExhaustive;
  std::uint64_t factor_seed = kDefaultFactorSeed;
};

// "c0,c1,...,cr" with canonical coefficient codes, constant term first, or
// for GF(2) only "0xHH..." in normal CRC form: bit i is the coefficient of
// x^i and x^width is implicit. Errors are kParse and name the offending
// character position.
Poly ParsePolySpec(std::string_view text, const FieldPtr& field,
                   std::optional<std::uint32_t> width = std::nullopt);

// "A" or "A..B", inclusive.
std::pair<std::uint64_t, std::uint64_t> ParseLengthRange(std::string_view text);

FieldPtr BuildField(const JobSpec& job);

struct LengthReport {
  std::uint64_t n = 0;
  std::uint32_t r = 0;
  WeightDistribution dual;
  WeightDistribution primal;
  std::uint64_t d_min = 0;
  std::optional<std::uint64_t> full_scans_fast;
  std::optional<std::uint64_t> full_scans_brute;
  std::vector<std::pair<double, double>> p_ue;  // (epsilon, value)
  std::optional<bool> match;
};

struct JobResult {
  JobMode mode = JobMode::kCompute;
  std::uint32_t p = 0;
  std::uint32_t delta = 0;
  std::vector<std::uint32_t> field_modulus;
  std::vector<Fq> g;
  std::uint64_t factor_seed = 0;
  std::vector<LengthReport> reports;

  bool all_match() const;
};

// Validates every length before running anything.
JobResult RunJob(const JobSpec& job);

// One compact JSON object per length, newline separated.
std::string RenderJson(const JobResult& result);
std::string RenderCsv(const JobResult& result);

// {"B": [...], "A": [...], "d_min": d}
std::string SpectraJson(const WeightDistribution& dual, const WeightDistribution& primal);

}  // namespace crcw

#endif  // CRCW_JOB_HPP_
