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

#include <string>
#include <vector>

namespace hecke::acceptance {

struct Options {
  /// Negative control: expect kappa orders one power of p too high.
  bool tamper_kappa_order = false;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  /// Counts of individual identities checked and how many failed.
  long checks = 0;
  long failures = 0;
  /// First failing assertion, or a short summary.
  std::string detail;
};

/// Runs criteria 1..12 in order. Never throws; exceptions become failures.
std::vector<CriterionResult> run_all(const Options& opts = {});
CriterionResult run_one(int id, const Options& opts = {});

inline constexpr int kCriteria = 12;

}  // namespace hecke::acceptance
