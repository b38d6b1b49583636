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

#include "crcw/crcw.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>

#include "crcw/error.hpp"
#include "crcw/job.hpp"
#include "crcw/lfsr.hpp"
#include "crcw/spectrum.hpp"

struct crcw_field {
  crcw::FieldPtr field;
};

struct crcw_code {
  crcw::CrcCode code;
};

struct crcw_job {
  crcw::JobSpec spec;
};

struct crcw_result {
  crcw::JobResult result;
  std::string json;
  std::string csv;
};

namespace {

thread_local std::string last_error;

crcw_status StatusFor(crcw::ErrorCode code) {
  switch (code) {
    case crcw::ErrorCode::kResource: return CRCW_RESOURCE;
    case crcw::ErrorCode::kInternal: return CRCW_INTERNAL;
    default: return CRCW_INVALID;
  }
}

template <typename F>
crcw_status Guard(F&& body) {
  last_error.clear();
  try {
    return body();
  } catch (const crcw::Error& e) {
    last_error = std::string(crcw::ErrorCodeName(e.code())) + ": " + e.what();
    return StatusFor(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return CRCW_RESOURCE;
  } catch (const std::exception& e) {
    last_error = e.what();
    return CRCW_INTERNAL;
  } catch (...) {
    last_error = "unknown failure";
    return CRCW_INTERNAL;
  }
}

crcw_status Invalid(const char* what) {
  last_error = what;
  return CRCW_INVALID;
}

}  // namespace

extern "C" {

const char* crcw_version(void) { return "1.0.0"; }

const char* crcw_last_error(void) { return last_error.c_str(); }

crcw_status crcw_field_create(uint32_t p, uint32_t delta, const char* modulus_text,
                              crcw_field** out) {
  if (out == nullptr) return Invalid("output handle is NULL");
  *out = nullptr;
  return Guard([&] {
    crcw::JobSpec spec;
    spec.p = p;
    spec.delta = delta;
    if (modulus_text != nullptr) spec.field_modulus = modulus_text;
    *out = new crcw_field{crcw::BuildField(spec)};
    return CRCW_OK;
  });
}

void crcw_field_destroy(crcw_field* field) { delete field; }

uint32_t crcw_field_order(const crcw_field* field) {
  return field == nullptr ? 0 : field->field->q();
}

crcw_status crcw_code_create(const crcw_field* field, const char* poly_text, uint32_t hex_width,
                             uint64_t n, crcw_code** out) {
  if (out == nullptr) return Invalid("output handle is NULL");
  *out = nullptr;
  if (field == nullptr || poly_text == nullptr) return Invalid("field and polynomial are required");
  return Guard([&] {
    std::optional<std::uint32_t> width;
    if (hex_width != 0) width = hex_width;
    crcw::Poly g = crcw::ParsePolySpec(poly_text, field->field, width);
    *out = new crcw_code{crcw::CrcCode(std::move(g), n)};
    return CRCW_OK;
  });
}

void crcw_code_destroy(crcw_code* code) { delete code; }

uint32_t crcw_code_degree(const crcw_code* code) { return code == nullptr ? 0 : code->code.r(); }

uint64_t crcw_code_length(const crcw_code* code) { return code == nullptr ? 0 : code->code.n(); }

crcw_status crcw_code_spectra_json(const crcw_code* code, unsigned threads, char** json_out) {
  if (code == nullptr || json_out == nullptr) return Invalid("code and output are required");
  *json_out = nullptr;
  return Guard([&] {
    crcw::SpectrumRun run = crcw::DualSpectrum(code->code, threads);
    crcw::WeightDistribution primal = crcw::MacWilliams(run.spectrum, code->code);
    const std::string text = crcw::SpectraJson(run.spectrum, primal);
    char* buf = static_cast<char*>(std::malloc(text.size() + 1));
    if (buf == nullptr) throw std::bad_alloc();
    std::memcpy(buf, text.c_str(), text.size() + 1);
    *json_out = buf;
    return CRCW_OK;
  });
}

void crcw_string_free(char* s) { std::free(s); }

crcw_status crcw_job_create(crcw_job** out) {
  if (out == nullptr) return Invalid("output handle is NULL");
  return Guard([&] {
    *out = new crcw_job{};
    return CRCW_OK;
  });
}

void crcw_job_destroy(crcw_job* job) { delete job; }

crcw_status crcw_job_set_field(crcw_job* job, uint32_t p, uint32_t delta,
                               const char* modulus_text) {
  if (job == nullptr) return Invalid("job is NULL");
  job->spec.p = p;
  job->spec.delta = delta;
  job->spec.field_modulus.reset();
  if (modulus_text != nullptr) job->spec.field_modulus = modulus_text;
  return CRCW_OK;
}

crcw_status crcw_job_set_poly(crcw_job* job, const char* poly_text) {
  if (job == nullptr || poly_text == nullptr) return Invalid("job and polynomial are required");
  job->spec.poly = poly_text;
  job->spec.width.reset();
  return CRCW_OK;
}

crcw_status crcw_job_set_hex(crcw_job* job, const char* hex_text, uint32_t width) {
  if (job == nullptr || hex_text == nullptr) return Invalid("job and polynomial are required");
  job->spec.poly = hex_text;
  job->spec.width = width;
  return CRCW_OK;
}

crcw_status crcw_job_set_lengths(crcw_job* job, uint64_t n_first, uint64_t n_last) {
  if (job == nullptr) return Invalid("job is NULL");
  if (n_first > n_last) return Invalid("empty length range");
  job->spec.n_first = n_first;
  job->spec.n_last = n_last;
  return CRCW_OK;
}

crcw_status crcw_job_set_length_text(crcw_job* job, const char* text) {
  if (job == nullptr || text == nullptr) return Invalid("job and length are required");
  return Guard([&] {
    const auto [a, b] = crcw::ParseLengthRange(text);
    job->spec.n_first = a;
    job->spec.n_last = b;
    return CRCW_OK;
  });
}

crcw_status crcw_job_set_mode(crcw_job* job, const char* mode) {
  if (job == nullptr || mode == nullptr) return Invalid("job and mode are required");
  return Guard([&] {
    job->spec.mode = crcw::ParseJobMode(mode);
    return CRCW_OK;
  });
}

crcw_status crcw_job_add_epsilon(crcw_job* job, double epsilon) {
  if (job == nullptr) return Invalid("job is NULL");
  if (!(epsilon >= 0.0 && epsilon <= 1.0)) return Invalid("epsilon must lie in [0, 1]");
  job->spec.epsilons.push_back(epsilon);
  return CRCW_OK;
}

crcw_status crcw_job_set_threads(crcw_job* job, unsigned threads) {
  if (job == nullptr) return Invalid("job is NULL");
  if (threads == 0) return Invalid("thread count must be positive");
  job->spec.threads = threads;
  return CRCW_OK;
}

crcw_status crcw_job_set_max_exhaustive(crcw_job* job, uint64_t max_exhaustive) {
  if (job == nullptr) return Invalid("job is NULL");
  job->spec.max_exhaustive = max_exhaustive;
  return CRCW_OK;
}

crcw_status crcw_job_run(const crcw_job* job, crcw_result** out) {
  if (job == nullptr || out == nullptr) return Invalid("job and output are required");
  *out = nullptr;
  return Guard([&] {
    auto* res = new crcw_result{crcw::RunJob(job->spec), {}, {}};
    try {
      res->json = crcw::RenderJson(res->result);
      res->csv = crcw::RenderCsv(res->result);
    } catch (...) {
      delete res;
      throw;
    }
    *out = res;
    if (!res->result.all_match()) {
      last_error = "verification mismatch between fast and exhaustive spectra";
      return CRCW_MISMATCH;
    }
    return CRCW_OK;
  });
}

void crcw_result_destroy(crcw_result* result) { delete result; }

size_t crcw_result_count(const crcw_result* result) {
  return result == nullptr ? 0 : result->result.reports.size();
}

int crcw_result_all_match(const crcw_result* result) {
  return result != nullptr && result->result.all_match() ? 1 : 0;
}

const char* crcw_result_json(const crcw_result* result) {
  return result == nullptr ? "" : result->json.c_str();
}

const char* crcw_result_csv(const crcw_result* result) {
  return result == nullptr ? "" : result->csv.c_str();
}

}  // extern "C"
