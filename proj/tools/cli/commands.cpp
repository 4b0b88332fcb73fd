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


#include "commands.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "acceptance.hpp"
#include "forms.hpp"
#include "hecke/cobar.hpp"
#include "hecke/derived.hpp"
#include "hecke/modforms.hpp"
#include "hecke/topo.hpp"

namespace hecke::cli {
namespace {

constexpr long kDefaultPrec = 10;

long need(const std::optional<long>& v, const char* flag) {
  if (!v) throw std::invalid_argument(std::string("missing required flag ") + flag);
  return *v;
}

std::size_t prec_of(const Params& in) { return static_cast<std::size_t>(in.prec.value_or(kDefaultPrec)); }

std::vector<long> primes_or(const Params& in, std::vector<long> fallback) {
  return in.primes.empty() ? fallback : in.primes;
}

void reject_p_in_primes(const std::vector<long>& primes, long p) {
  for (long l : primes)
    if (l == p) throw std::invalid_argument("--primes must not contain p = " + std::to_string(p));
}

Json series_json(std::optional<long> weight, const std::vector<std::string>& coeffs) {
  Json j;
  j["weight"] = weight ? Json(*weight) : Json(nullptr);
  j["prec"] = coeffs.size();
  j["coeffs"] = coeffs;
  return j;
}

Json series_json(const QSeries& s) {
  std::vector<std::string> c;
  for (const auto& x : s.coeffs()) c.push_back(to_string(x));
  return series_json(s.weight(), c);
}

Json series_json(long k, const std::vector<QuadraticNumber>& coords, std::size_t prec) {
  std::vector<std::string> c;
  for (const auto& x : expansion(k, coords, prec)) c.push_back(x.to_string());
  return series_json(k, c);
}

Json character_json(const std::map<long, QuadraticNumber>& ch) {
  Json j = Json::object();
  for (const auto& [l, v] : ch) j[std::to_string(l)] = v.to_string();
  return j;
}

Json matrix_json(const QMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

std::string p_power_string(long p, long e) { return ipow(Integer(p), static_cast<unsigned long>(e)).get_str(); }

// Eigencharacter of the form with coordinates f, or nullopt if f is not an eigenform.
std::optional<std::map<long, QuadraticNumber>> character_of(long k, const std::vector<Rational>& f,
                                                            const std::vector<long>& primes) {
  std::size_t lead = 0;
  while (lead < f.size() && f[lead] == 0) ++lead;
  if (lead == f.size()) return std::nullopt;
  std::map<long, QuadraticNumber> ch;
  for (long l : primes) {
    auto img = hecke_matrix(k, l) * f;
    Rational lambda = img[lead] / f[lead];
    for (std::size_t i = 0; i < f.size(); ++i)
      if (img[i] != lambda * f[i]) return std::nullopt;
    ch[l] = QuadraticNumber(lambda);
  }
  return ch;
}

}  // namespace

Outcome run_qexp(const Params& in) {
  Outcome out;
  const std::size_t prec = prec_of(in);
  if (!in.g.empty()) {
    FormExpr f = parse_form(in.g);
    QSeries s = f.series(prec);
    if (in.weight && *in.weight != f.weight())
      throw std::invalid_argument("--weight " + std::to_string(*in.weight) + " does not match the form's weight " +
                                  std::to_string(f.weight()));
    out.payload = series_json(s);
    return out;
  }
  const long k = need(in.weight, "--weight or --g");
  Json basis = Json::array();
  if (static_cast<std::size_t>(dim_Mk(k)) > prec)
    throw std::invalid_argument("--prec must be at least dim M_k = " + std::to_string(dim_Mk(k)));
  for (const auto& s : miller_basis(k, prec)) basis.push_back(series_json(s));
  out.payload["weight"] = k;
  out.payload["basis"] = basis;
  return out;
}

Outcome run_hecke_matrix(const Params& in) {
  Outcome out;
  const long k = need(in.weight, "--weight"), n = need(in.n, "--n");
  QMatrix m = in.p ? hecke_matrix(k, n, PLocalContext(*in.p)).entries : hecke_matrix(k, n);
  out.payload["weight"] = k;
  out.payload["index"] = n;
  out.payload["entries"] = matrix_json(m);
  return out;
}

Outcome run_eigenforms(const Params& in) {
  Outcome out;
  const long k = need(in.weight, "--weight");
  const auto primes = primes_or(in, {2, 3, 5});
  const std::size_t prec = prec_of(in);
  EigenSystem sys = eigencharacters(k, primes);
  Json chars = Json::array();
  for (const auto& c : sys.characters) {
    Json j;
    j["kind"] = c.kind == FormKind::Eisenstein ? "eisenstein" : "cuspidal";
    j["eigenvalues"] = character_json(c.eigenvalues);
    j["charPoly"] = c.char_poly.to_string();
    j["choice"] = c.choice;
    j["radicand"] = c.radicand.get_str();
    j["eigenform"] = series_json(k, c.eigenform, prec);
    // the form's own Fourier coefficients must reproduce the eigenvalues
    const std::size_t norm_index = c.kind == FormKind::Eisenstein ? 0 : 1;
    const auto f = expansion(k, c.eigenform, static_cast<std::size_t>(primes.back()) + 1);
    for (long l : primes) {
      if (c.kind == FormKind::Cuspidal)
        out.expect(f[static_cast<std::size_t>(l)] == c.eigenvalues.at(l) * f[norm_index],
                   "a_l != lambda(T_l) for a cusp eigenform at l = " + std::to_string(l));
    }
    chars.push_back(j);
  }
  Json ne = Json::array();
  for (const auto& p : sys.not_enumerated) ne.push_back(p.to_string());
  out.payload["weight"] = k;
  out.payload["primes"] = primes;
  out.payload["characters"] = chars;
  out.payload["notEnumerated"] = ne;
  return out;
}

Outcome run_kappa_order(const Params& in) {
  Outcome out;
  const long p = need(in.p, "--p"), n = need(in.n, "--n");
  const long k = in.weight.value_or(12);
  std::vector<long> primes = in.primes;
  if (primes.empty())
    for (long l : {2L, 3L, 7L, 11L, 13L})
      if (l != p) primes.push_back(l);
  reject_p_in_primes(primes, p);
  CommutatorContext ctx(p, n);
  ClassOrder c = class_order(ctx, k, primes);
  // Two more primes outside L and p.
  std::vector<long> extended = primes;
  for (long l = primes.back(), added = 0; added < 2;) {
    l = next_prime(l);
    if (l == p || std::find(primes.begin(), primes.end(), l) != primes.end()) continue;
    extended.push_back(l);
    ++added;
  }
  std::sort(extended.begin(), extended.end());
  const bool stable = class_order(ctx, k, extended).order == c.order;
  out.expect(stable, "kappa order changes when L is extended");
  out.payload["order"] = c.order.get_str();
  out.payload["stableUnderExtendedL"] = stable;
  return out;
}

Outcome run_topo_classify(const Params& in) {
  Outcome out;
  const long p = need(in.p, "--p"), n = need(in.n, "--n"), j = need(in.j, "--j"), k = need(in.weight, "--weight");
  const auto primes = primes_or(in, first_primes(3, {p}));
  reject_p_in_primes(primes, p);
  const std::size_t prec = prec_of(in);
  TwoCellModule m(p, n, j, k);
  auto forms = classify_two_cell(p, n, j, k, primes);
  auto brute = joint_eigenforms(m, primes);
  out.expect(same_eigenforms(forms, brute), "classification differs from the brute-force joint eigenvectors");
  out.expect(multiplicity_one_check(m, primes).max_rank() <= 1, "multiplicity one fails");
  out.expect(composite_hecke_check(m, brute, primes), "composite Hecke operators do not act by the expected scalar");
  Json list = Json::array();
  for (const auto& f : forms) {
    std::vector<QuadraticNumber> bottom(f.vector.begin(), f.vector.begin() + static_cast<std::ptrdiff_t>(m.bottom_dim()));
    std::vector<QuadraticNumber> top(f.vector.begin() + static_cast<std::ptrdiff_t>(m.bottom_dim()), f.vector.end());
    Json e;
    e["support"] = to_string(f.support);
    e["character"] = character_json(f.character);
    e["bottom"] = series_json(m.weight(), bottom, prec);
    e["top"] = series_json(m.top_weight(), top, prec);
    list.push_back(e);
  }
  out.payload = list;
  return out;
}

Outcome run_obstruction(const Params& in) {
  Outcome out;
  const long p = need(in.p, "--p"), n = need(in.n, "--n"), j = in.j.value_or(0);
  if (in.g.empty()) throw std::invalid_argument("missing required flag --g");
  const auto primes = primes_or(in, first_primes(3, {p}));
  reject_p_in_primes(primes, p);
  FormExpr expr = parse_form(in.g);
  const long kp = expr.weight();
  const auto d = static_cast<std::size_t>(dim_Mk(kp));
  ModularForm g = ModularForm::from_series(kp, expr.series(d + 20));
  auto ch = character_of(kp, g.coords, primes);
  if (!ch) throw std::invalid_argument("--g " + in.g + " is not a Hecke eigenform");
  std::vector<QuadraticNumber> gq(g.coords.begin(), g.coords.end());
  ExtensionResult r = extension_obstruction(p, n, j, kp, gq, *ch, primes);
  if (r.extends) {
    out.payload["verdict"] = "extends";
    out.payload["f0"] = series_json(kp + (p - 1) * n, r.f0, prec_of(in));
  } else {
    out.payload["verdict"] = "obstructed";
    out.payload["order"] = p_power_string(p, r.order_exponent);
  }
  return out;
}

Outcome run_cobar_verify(const Params& in) {
  Outcome out;
  const long p = need(in.p, "--p"), n = need(in.n, "--n"), j = in.j.value_or(0);
  const long nu = p_valuation(n, p);
  const bool cocycle = cobar_d(alpha_cocycle(p, n), p).is_zero();
  out.expect(cocycle, "sigma_n is not a cocycle");
  Ext1Result e = ext1_order(p, n);
  out.expect(e.order.get_str() == p_power_string(p, 1 + nu), "Ext^1 order differs from p^(1+nu)");
  ZetaResult z = twisted_zeta_check(p, n, j);
  const Integer pj = ipow(Integer(p), static_cast<unsigned long>(j));
  const Integer modulus = ipow(Integer(p), static_cast<unsigned long>(1 + nu));
  const Integer u = z.solutions.front();
  std::string zeta;
  if (u == 0) zeta = "0";
  else if (u == pj % modulus) zeta = "p^j*sigma_n";
  else zeta = u.get_str() + "*sigma_n";
  out.expect(u == pj % modulus, "zeta(1) is not p^j sigma_n");
  out.payload["cocycle"] = cocycle;
  out.payload["ext1Order"] = e.order.get_str();
  out.payload["zeta1"] = zeta;
  return out;
}

Outcome run_ext1(const Params& in) {
  Outcome out;
  const long p = need(in.p, "--p"), n = need(in.n, "--n");
  Ext1Result e = ext1_order(p, n);
  out.payload["order"] = e.order.get_str();
  out.payload["kernelRank"] = e.kernel_rank;
  out.payload["sigmaGenerates"] = e.sigma_generates;
  out.payload["generator"] = e.kernel_generator.to_string();
  out.payload["sigma"] = alpha_cocycle(p, n).to_string();
  return out;
}

Outcome run_selftest(const Params& in) {
  Outcome out;
  acceptance::Options opts;
  opts.tamper_kappa_order = in.tamper;
  Json list = Json::array();
  long passed = 0;
  for (const auto& r : acceptance::run_all(opts)) {
    out.expect(r.passed, "criterion " + std::to_string(r.id) + " (" + r.name + "): " + r.detail);
    if (r.passed) ++passed;
    Json c;
    c["id"] = r.id;
    c["name"] = r.name;
    c["pass"] = r.passed;
    c["checks"] = r.checks;
    c["detail"] = r.detail;
    list.push_back(c);
  }
  out.payload["criteria"] = list;
  out.payload["passed"] = passed;
  out.payload["failed"] = static_cast<long>(list.size()) - passed;
  return out;
}

Json echo_parameters(const Params& in) {
  Json j = Json::object();
  if (in.p) j["p"] = *in.p;
  if (in.n) j["n"] = *in.n;
  if (in.j) j["j"] = *in.j;
  if (in.weight) j["weight"] = *in.weight;
  if (!in.primes.empty()) j["primes"] = in.primes;
  if (in.prec) j["prec"] = *in.prec;
  if (!in.g.empty()) j["g"] = in.g;
  return j;
}

namespace {

std::string csv_field(const Json& v) {
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

void flatten(const Json& v, const std::string& path, std::ostringstream& os) {
  if (v.is_object() || v.is_array()) {
    if (v.empty()) {
      os << csv_field(Json(path)) << "," << (v.is_object() ? "{}" : "[]") << "\n";
      return;
    }
    std::size_t i = 0;
    for (auto it = v.begin(); it != v.end(); ++it, ++i) {
      std::string key = v.is_object() ? it.key() : std::to_string(i);
      flatten(*it, path.empty() ? key : path + "." + key, os);
    }
    return;
  }
  os << csv_field(Json(path)) << "," << csv_field(v) << "\n";
}

}  // namespace

std::string to_csv(const Json& payload) {
  std::ostringstream os;
  if (payload.is_object() && payload.contains("entries") && payload.contains("index")) {
    for (const auto& row : payload["entries"]) {
      for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_field(row[i]);
      os << "\n";
    }
    return os.str();
  }
  if (payload.is_object() && payload.contains("coeffs") && payload.contains("prec")) {
    os << "n,coeff\n";
    std::size_t i = 0;
    for (const auto& c : payload["coeffs"]) os << i++ << "," << csv_field(c) << "\n";
    return os.str();
  }
  os << "path,value\n";
  flatten(payload, "", os);
  return os.str();
}

}  // namespace hecke::cli
