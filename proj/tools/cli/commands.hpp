// Copyright 2026 The hecke-topo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace hecke::cli {

using Json = nlohmann::ordered_json;

/// Validated flag values; unset optionals take per-command defaults.
struct Params {
  std::optional<long> p, n, j, weight;
  std::vector<long> primes;
  std::optional<long> prec;
  std::string g;
  bool tamper = false;
};

/// Payload plus the tally of command-level assertions.
struct Outcome {
  Json payload;
  long checks = 0;
  long failures = 0;
  std::string first_failure;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    ++failures;
    if (first_failure.empty()) first_failure = what;
  }
};

Outcome run_qexp(const Params& in);
Outcome run_hecke_matrix(const Params& in);
Outcome run_eigenforms(const Params& in);
Outcome run_kappa_order(const Params& in);
Outcome run_topo_classify(const Params& in);
Outcome run_obstruction(const Params& in);
Outcome run_cobar_verify(const Params& in);
Outcome run_ext1(const Params& in);
Outcome run_selftest(const Params& in);

/// The flags a command actually used, for the run report.
Json echo_parameters(const Params& in);

/// Flattens a payload into CSV: matrices as rows, series as "n,coeff",
/// anything else as "path,value" lines.
std::string to_csv(const Json& payload);

}  // namespace hecke::cli
