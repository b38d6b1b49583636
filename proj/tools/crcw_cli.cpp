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

// crcweight: exact dual and primal weight distributions of CRC codes.
//
//   crcweight --poly 1,1,0,1 --n 7
//   crcweight --hex 0x07 --width 8 --n-range 9..16 --mode verify
//   crcweight --p 3 --poly 2,1 --n 2 --output csv

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "crcw/crcw.h"

namespace {

struct JobDeleter {
  void operator()(crcw_job* j) const { crcw_job_destroy(j); }
};
struct ResultDeleter {
  void operator()(crcw_result* r) const { crcw_result_destroy(r); }
};

int Report(crcw_status status) {
  std::cerr << "crcweight: " << crcw_last_error() << "\n";
  return static_cast<int>(status);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact weight distributions of CRC codes over GF(p^delta)", "crcweight"};

  unsigned p = 2;
  unsigned delta = 1;
  std::string field_modulus;
  std::string poly;
  std::string hex;
  unsigned width = 0;
  std::string n_single;
  std::string n_range;
  std::string mode = "compute";
  std::vector<double> epsilons;
  std::string output = "json";
  unsigned threads = 1;
  std::uint64_t max_exhaustive = 0;

  app.add_option("--p", p, "Field characteristic")->capture_default_str();
  app.add_option("--delta", delta, "Extension degree")->capture_default_str();
  app.add_option("--field-modulus", field_modulus,
                 "Field modulus over F_p as c0,...,c_delta (default: least irreducible)");
  auto* poly_opt = app.add_option("--poly", poly, "Generator as c0,...,cr, constant first");
  auto* hex_opt = app.add_option("--hex", hex, "GF(2) generator in normal hex CRC form");
  auto* width_opt = app.add_option("--width", width, "Degree of the hex generator");
  poly_opt->excludes(hex_opt);
  hex_opt->needs(width_opt);
  auto* n_opt = app.add_option("--n", n_single, "Code length");
  auto* range_opt = app.add_option("--n-range", n_range, "Inclusive length range A..B");
  n_opt->excludes(range_opt);
  app.add_option("--mode", mode, "compute | brute | verify")
      ->check(CLI::IsMember({"compute", "brute", "verify"}))
      ->capture_default_str();
  app.add_option("--epsilon", epsilons, "Symbol error rate for P_ue (repeatable)")
      ->check(CLI::Range(0.0, 1.0));
  app.add_option("--output", output, "json | csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app.add_option("--threads", threads, "Worker threads")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--max-exhaustive", max_exhaustive,
                 "Largest q^r enumerated by the exhaustive oracle");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : CRCW_INVALID;
  }
  if (poly.empty() && hex.empty()) {
    std::cerr << "crcweight: one of --poly or --hex is required\n";
    return CRCW_INVALID;
  }
  if (n_single.empty() && n_range.empty()) {
    std::cerr << "crcweight: one of --n or --n-range is required\n";
    return CRCW_INVALID;
  }

  crcw_job* raw = nullptr;
  if (crcw_status s = crcw_job_create(&raw); s != CRCW_OK) return Report(s);
  std::unique_ptr<crcw_job, JobDeleter> job(raw);

  crcw_status s = crcw_job_set_field(job.get(), p, delta,
                                     field_modulus.empty() ? nullptr : field_modulus.c_str());
  if (s == CRCW_OK) {
    s = hex.empty() ? crcw_job_set_poly(job.get(), poly.c_str())
                    : crcw_job_set_hex(job.get(), hex.c_str(), width);
  }
  if (s == CRCW_OK) {
    s = crcw_job_set_length_text(job.get(), n_single.empty() ? n_range.c_str() : n_single.c_str());
  }
  if (s == CRCW_OK) s = crcw_job_set_mode(job.get(), mode.c_str());
  for (double eps : epsilons) {
    if (s == CRCW_OK) s = crcw_job_add_epsilon(job.get(), eps);
  }
  if (s == CRCW_OK) s = crcw_job_set_threads(job.get(), threads);
  if (s == CRCW_OK && max_exhaustive != 0) {
    s = crcw_job_set_max_exhaustive(job.get(), max_exhaustive);
  }
  if (s != CRCW_OK) return Report(s);

  crcw_result* res_raw = nullptr;
  s = crcw_job_run(job.get(), &res_raw);
  std::unique_ptr<crcw_result, ResultDeleter> result(res_raw);
  if (result) {
    std::fputs(output == "csv" ? crcw_result_csv(result.get()) : crcw_result_json(result.get()),
               stdout);
    std::fflush(stdout);
  }
  if (s != CRCW_OK) return Report(s);
  return 0;
}
