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


#include <chrono>
#include <cstdio>
#include <cstring>

#include "acceptance.hpp"

// One PASS/FAIL line per criterion; exit status 1 if any fails.
int main(int argc, char** argv) {
  hecke::acceptance::Options opts;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--tamper") == 0) opts.tamper_kappa_order = true;
  int failed = 0;
  for (int id = 1; id <= hecke::acceptance::kCriteria; ++id) {
    const auto start = std::chrono::steady_clock::now();
    const auto r = hecke::acceptance::run_one(id, opts);
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s  %2d  %-30s %s [%lld ms]\n", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(), r.detail.c_str(),
                static_cast<long long>(ms));
    std::fflush(stdout);
    if (!r.passed) ++failed;
  }
  return failed ? 1 : 0;
}
