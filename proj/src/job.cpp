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

#include <charconv>
#include <limits>
#include <sstream>

#include "json.hpp"

#include "crcw/error.hpp"
#include "crcw/lfsr.hpp"

namespace crcw {

namespace {

[[noreturn]] void ParseFail(std::string_view what, std::size_t pos) {
  std::ostringstream os;
  os << what << " at position " << pos;
  Fail(ErrorCode::kParse, os.str());
}

// Comma separated decimal values, each below `bound`.
std::vector<std::uint32_t> ParseCodeList(std::string_view text, std::uint64_t bound) {
  std::vector<std::uint32_t> out;
  std::size_t pos = 0;
  for (;;) {
    const std::size_t start = pos;
    std::uint64_t value = 0;
    const auto [end, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec == std::errc::result_out_of_range) ParseFail("coefficient out of range", start);
    if (ec != std::errc()) ParseFail("expected a coefficient", start);
    pos = static_cast<std::size_t>(end - text.data());
    if (value >= bound) {
      ParseFail("coefficient " + std::to_string(value) + " is not below " +
                    std::to_string(bound),
                start);
    }
    out.push_back(static_cast<std::uint32_t>(value));
    if (pos == text.size()) break;
    if (text[pos] != ',') ParseFail("expected ','", pos);
    ++pos;
  }
  return out;
}

int HexValue(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

Poly ParseHex(std::string_view text, const FieldPtr& field, std::optional<std::uint32_t> width) {
  if (field->q() != 2) ParseFail("hex notation requires GF(2)", 0);
  if (!width) ParseFail("hex notation requires a width", 0);
  if (*width == 0) ParseFail("hex width must be positive", 0);
  if (text.size() <= 2) ParseFail("expected hex digits", 2);
  std::vector<Fq> coeffs(*width + std::size_t{1}, 0);
  coeffs[*width] = 1;
  std::size_t bit = 4 * (text.size() - 2);
  for (std::size_t pos = 2; pos < text.size(); ++pos) {
    const int v = HexValue(text[pos]);
    if (v < 0) ParseFail("invalid hex digit", pos);
    for (int b = 3; b >= 0; --b) {
      --bit;
      if (((v >> b) & 1) == 0) continue;
      if (bit >= *width) ParseFail("hex value has bits at or above the width", pos);
      coeffs[bit] = 1;
    }
  }
  return Poly(field, std::move(coeffs));
}

void PutCount(nlohmann::ordered_json& out, const BigInt& v) {
  if (v <= std::numeric_limits<std::uint64_t>::max()) {
    out.push_back(static_cast<std::uint64_t>(v));
  } else {
    out.push_back(v.str());
  }
}

nlohmann::ordered_json CountsJson(const WeightDistribution& w) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : w.counts) PutCount(arr, c);
  return arr;
}

template <typename T>
nlohmann::ordered_json OptionalJson(const std::optional<T>& v) {
  return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

}  // namespace

JobMode ParseJobMode(std::string_view text) {
  if (text == "compute") return JobMode::kCompute;
  if (text == "brute") return JobMode::kBrute;
  if (text == "verify") return JobMode::kVerify;
  Fail(ErrorCode::kParse, "unknown mode '" + std::string(text) + "'");
}

OutputFormat ParseOutputFormat(std::string_view text) {
  if (text == "json") return OutputFormat::kJson;
  if (text == "csv") return OutputFormat::kCsv;
  Fail(ErrorCode::kParse, "unknown output format '" + std::string(text) + "'");
}

const char* JobModeName(JobMode mode) {
  switch (mode) {
    case JobMode::kCompute: return "compute";
    case JobMode::kBrute: return "brute";
    case JobMode::kVerify: return "verify";
  }
  return "?";
}

Poly ParsePolySpec(std::string_view text, const FieldPtr& field,
                   std::optional<std::uint32_t> width) {
  if (!field) Fail(ErrorCode::kParameter, "field is required");
  if (text.empty()) ParseFail("empty polynomial", 0);
  if (text.size() >= 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
    return ParseHex(text, field, width);
  }
  if (width) ParseFail("width applies only to hex notation", 0);
  auto codes = ParseCodeList(text, field->q());
  return Poly(field, std::vector<Fq>(codes.begin(), codes.end()));
}

std::pair<std::uint64_t, std::uint64_t> ParseLengthRange(std::string_view text) {
  auto number = [&](std::size_t start, std::size_t stop) {
    std::uint64_t v = 0;
    const auto [end, ec] = std::from_chars(text.data() + start, text.data() + stop, v);
    if (ec != std::errc()) ParseFail("expected a length", start);
    if (end != text.data() + stop) ParseFail("unexpected character", end - text.data());
    return v;
  };
  const std::size_t dots = text.find("..");
  if (dots == std::string_view::npos) {
    const auto v = number(0, text.size());
    return {v, v};
  }
  const auto a = number(0, dots);
  const auto b = number(dots + 2, text.size());
  if (a > b) ParseFail("empty length range", dots);
  return {a, b};
}

FieldPtr BuildField(const JobSpec& job) {
  if (!job.field_modulus) return GaloisField::Create(job.p, job.delta);
  if (!IsPrime(job.p)) Fail(ErrorCode::kInvalidInput, "characteristic must be prime");
  return GaloisField::Create(job.p, job.delta, ParseCodeList(*job.field_modulus, job.p));
}

bool JobResult::all_match() const {
  for (const auto& r : reports) {
    if (r.match && !*r.match) return false;
  }
  return true;
}

JobResult RunJob(const JobSpec& job) {
  const FieldPtr field = BuildField(job);
  const Poly g = ParsePolySpec(job.poly, field, job.width);
  if (job.n_first > job.n_last) Fail(ErrorCode::kInvalidInput, "empty length range");
  for (double eps : job.epsilons) {
    if (!(eps >= 0.0 && eps <= 1.0)) Fail(ErrorCode::kParameter, "epsilon must lie in [0, 1]");
  }
  std::vector<CrcCode> codes;
  for (std::uint64_t n = job.n_first;; ++n) {
    codes.emplace_back(g, n);
    if (n == job.n_last) break;
  }

  JobResult result;
  result.mode = job.mode;
  result.p = field->p();
  result.delta = field->delta();
  result.field_modulus = field->modulus();
  result.g = g.coeffs();
  result.factor_seed = job.factor_seed;
  for (const auto& code : codes) {
    LengthReport rep;
    rep.n = code.n();
    rep.r = code.r();
    if (job.mode == JobMode::kBrute) {
      SpectrumRun run = BruteForceDualSpectrum(code, job.max_exhaustive);
      rep.dual = std::move(run.spectrum);
      rep.full_scans_brute = run.full_scans;
    } else if (job.mode == JobMode::kCompute) {
      SpectrumRun run = DualSpectrum(code, job.threads, job.factor_seed);
      rep.dual = std::move(run.spectrum);
      rep.full_scans_fast = run.full_scans;
    } else {
      VerifyReport v = Verify(code, job.max_exhaustive, job.threads, job.factor_seed);
      rep.dual = std::move(v.fast.spectrum);
      rep.full_scans_fast = v.fast.full_scans;
      rep.full_scans_brute = v.brute.full_scans;
      rep.match = v.match;
    }
    rep.primal = MacWilliams(rep.dual, code);
    rep.d_min = MinDistance(rep.primal);
    for (double eps : job.epsilons) {
      rep.p_ue.emplace_back(eps, UndetectedErrorProbability(rep.primal, eps, field->q()));
    }
    result.reports.push_back(std::move(rep));
  }
  return result;
}

std::string RenderJson(const JobResult& result) {
  std::string out;
  for (const auto& rep : result.reports) {
    nlohmann::ordered_json j;
    j["p"] = result.p;
    j["delta"] = result.delta;
    j["field_modulus"] = result.field_modulus;
    j["g"] = result.g;
    j["n"] = rep.n;
    j["r"] = rep.r;
    j["B"] = CountsJson(rep.dual);
    j["A"] = CountsJson(rep.primal);
    j["d_min"] = rep.d_min;
    j["full_scans_fast"] = OptionalJson(rep.full_scans_fast);
    j["full_scans_brute"] = OptionalJson(rep.full_scans_brute);
    if (!rep.p_ue.empty()) {
      auto arr = nlohmann::ordered_json::array();
      for (const auto& [eps, v] : rep.p_ue) {
        arr.push_back(nlohmann::ordered_json{{"epsilon", eps}, {"value", v}});
      }
      j["P_ue"] = std::move(arr);
    }
    j["mode"] = JobModeName(result.mode);
    if (rep.match) j["match"] = *rep.match;
    j["factor_seed"] = result.factor_seed;
    out += j.dump();
    out += '\n';
  }
  return out;
}

std::string SpectraJson(const WeightDistribution& dual, const WeightDistribution& primal) {
  nlohmann::ordered_json j;
  j["B"] = CountsJson(dual);
  j["A"] = CountsJson(primal);
  j["d_min"] = MinDistance(primal);
  return j.dump();
}

std::string RenderCsv(const JobResult& result) {
  std::string out = "n,weight,B,A\n";
  for (const auto& rep : result.reports) {
    for (std::uint64_t w = 0; w <= rep.n; ++w) {
      out += std::to_string(rep.n) + ',' + std::to_string(w) + ',' + rep.dual.counts[w].str() +
             ',' + rep.primal.counts[w].str() + '\n';
    }
  }
  return out;
}

}  // namespace crcw
