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
#include <functional>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"
#include "hecke/arith.hpp"
#include "hecke/modforms.hpp"

namespace {

using hecke::cli::Json;
using hecke::cli::Outcome;
using hecke::cli::Params;

void validate(const Params& in) {
  auto bad = [](const std::string& msg) { throw std::invalid_argument(msg); };
  if (in.p && (*in.p < 5 || !hecke::is_prime(*in.p))) bad("--p must be a prime >= 5, got " + std::to_string(*in.p));
  if (in.n && *in.n < 1) bad("--n must be >= 1");
  if (in.j && *in.j < 0) bad("--j must be >= 0");
  if (in.weight && (*in.weight < 0 || *in.weight % 2 != 0)) bad("--weight must be a nonnegative even integer");
  if (in.prec && (*in.prec < 1 || *in.prec > 100000)) bad("--prec must lie in [1, 100000]");
  for (long l : in.primes)
    if (!hecke::is_prime(l)) bad("--primes entry " + std::to_string(l) + " is not prime");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Hecke operators on modular forms and their topological lifts"};
  app.require_subcommand(1);
  app.fallthrough();
  bool csv = false, report = false, timing = false;
  std::string cache_dir;
  app.add_flag("--csv", csv, "emit CSV instead of JSON");
  app.add_flag("--report", report, "wrap the result in a full run report");
  app.add_flag("--timing", timing, "include wall time in the report");
  app.add_option("--cache-dir", cache_dir, "directory for the Hecke matrix cache");

  Params in;
  std::map<CLI::App*, std::function<Outcome(const Params&)>> handlers;
  auto sub = [&](const char* name, const char* help, Outcome (*fn)(const Params&)) {
    CLI::App* s = app.add_subcommand(name, help);
    handlers[s] = fn;
    return s;
  };
  auto opt_p = [&](CLI::App* s, bool req) { s->add_option("--p", in.p, "prime p >= 5")->required(req); };
  auto opt_n = [&](CLI::App* s, bool req) { s->add_option("--n", in.n, "n >= 1")->required(req); };
  auto opt_j = [&](CLI::App* s, bool req) { s->add_option("--j", in.j, "j >= 0")->required(req); };
  auto opt_k = [&](CLI::App* s, bool req) { s->add_option("--weight", in.weight, "even weight")->required(req); };
  auto opt_primes = [&](CLI::App* s) {
    s->add_option("--primes", in.primes, "comma-separated Hecke primes")->delimiter(',');
  };
  auto opt_prec = [&](CLI::App* s) { s->add_option("--prec", in.prec, "number of q-expansion coefficients"); };
  auto opt_g = [&](CLI::App* s, bool req) {
    s->add_option("--g", in.g, "form such as delta, E4*delta, E12")->required(req);
  };

  auto* qexp = sub("qexp", "q-expansion of a form or of the Miller basis", hecke::cli::run_qexp);
  opt_g(qexp, false), opt_k(qexp, false), opt_prec(qexp);
  auto* hm = sub("hecke-matrix", "matrix of T_n on the Miller basis", hecke::cli::run_hecke_matrix);
  opt_k(hm, true), opt_n(hm, true), opt_p(hm, false);
  auto* ef = sub("eigenforms", "eigencharacters and normalized eigenforms", hecke::cli::run_eigenforms);
  opt_k(ef, true), opt_primes(ef), opt_prec(ef);
  auto* ko = sub("kappa-order", "order of the commutator class", hecke::cli::run_kappa_order);
  opt_p(ko, true), opt_n(ko, true), opt_k(ko, false), opt_primes(ko);
  auto* tc = sub("topo-classify", "eigenforms of a two-cell module", hecke::cli::run_topo_classify);
  opt_p(tc, true), opt_n(tc, true), opt_j(tc, true), opt_k(tc, true), opt_primes(tc), opt_prec(tc);
  auto* ob = sub("obstruction", "does an eigenform on the top cell extend", hecke::cli::run_obstruction);
  opt_p(ob, true), opt_n(ob, true), opt_j(ob, false), opt_g(ob, true), opt_primes(ob), opt_prec(ob);
  auto* cv = sub("cobar-verify", "cocycle, Ext^1 order and zeta(1)", hecke::cli::run_cobar_verify);
  opt_p(cv, true), opt_n(cv, true), opt_j(cv, false);
  auto* e1 = sub("ext1", "Ext^1 of the cobar complex", hecke::cli::run_ext1);
  opt_p(e1, true), opt_n(e1, true);
  auto* st = sub("selftest", "run the acceptance criteria", hecke::cli::run_selftest);
  st->add_flag("--tamper", in.tamper)->group("");  // negative control

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  CLI::App* chosen = app.get_subcommands().front();
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    validate(in);
    if (!cache_dir.empty()) hecke::set_cache_directory(std::filesystem::path(cache_dir));
    out = handlers.at(chosen)(in);
  } catch (const hecke::AssertionFailure& e) {
    std::cerr << "assertion failed: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  const auto ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();

  Json doc = out.payload;
  if (report) {
    doc = Json::object();
    doc["command"] = chosen->get_name();
    doc["parameters"] = hecke::cli::echo_parameters(in);
    doc["result"] = out.payload;
    doc["assertions"] = {{"checked", out.checks}, {"failed", out.failures}};
    if (timing) doc["wallTimeMs"] = ms;
  } else if (timing) {
    std::cerr << "wall time: " << ms << " ms\n";
  }
  std::cout << (csv ? hecke::cli::to_csv(doc) : doc.dump(2) + "\n");
  if (out.failures > 0) {
    std::cerr << "assertion failed: " << out.first_failure << "\n";
    return 1;
  }
  return 0;
}
