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


#include "hecke/cobar.hpp"

#include <sstream>
#include <stdexcept>

#include "hecke/arith.hpp"
#include "hecke/smith.hpp"

namespace hecke {

void CobarElement::add(const std::array<long, 3>& key, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = terms.emplace(key, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

CobarElement& CobarElement::operator+=(const CobarElement& o) {
  if (degree != o.degree && !o.is_zero() && !is_zero()) throw std::invalid_argument("cobar degrees differ");
  if (is_zero()) degree = o.degree;
  for (const auto& [k, c] : o.terms) add(k, c);
  return *this;
}

CobarElement& CobarElement::operator-=(const CobarElement& o) {
  if (degree != o.degree && !o.is_zero() && !is_zero()) throw std::invalid_argument("cobar degrees differ");
  if (is_zero()) degree = o.degree;
  for (const auto& [k, c] : o.terms) add(k, -c);
  return *this;
}

CobarElement operator*(const Rational& s, CobarElement e) {
  if (s == 0) {
    e.terms.clear();
    return e;
  }
  for (auto& kv : e.terms) kv.second *= s;
  return e;
}

std::string CobarElement::to_string() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  auto mono = [](const char* name, long e) -> std::string {
    if (e == 0) return "";
    return e == 1 ? std::string(name) : std::string(name) + "^" + std::to_string(e);
  };
  for (const auto& [k, c] : terms) {
    std::string left = mono("v1", k[0]);
    std::string t = mono("t1", k[1]);
    if (!left.empty() && !t.empty()) left += "*";
    left += t;
    if (left.empty()) left = "1";
    std::string body = left;
    if (degree == 2) {
      std::string right = mono("t1", k[2]);
      body += "|" + (right.empty() ? std::string("1") : right);
    }
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    Rational mag = abs(c);
    if (body == "1") os << hecke::to_string(mag);
    else if (mag == 1) os << body;
    else os << hecke::to_string(mag) << "*" << body;
  }
  return os.str();
}

CobarElement normalize(const RawTensor& e, long p) {
  CobarElement out;
  out.degree = 2;
  for (const auto& [k, c] : e) {
    const long a = k[0], b = k[1], vc = k[2], te = k[3];
    // v^a t^b (v + p t)^vc (x) t^te
    for (long i = 0; i <= vc; ++i)
      out.add({a + vc - i, b + i, te}, c * Rational(binomial(vc, i) * ipow(Integer(p), static_cast<unsigned long>(i))));
  }
  return out;
}

RawTensor as_raw(const CobarElement& e) {
  if (e.degree != 2) throw std::invalid_argument("as_raw: degree-2 element required");
  RawTensor r;
  for (const auto& [k, c] : e.terms) r[{k[0], k[1], 0, k[2]}] += c;
  return r;
}

CobarElement cobar_d(const CobarElement& e, long p) {
  CobarElement out;
  if (e.degree == 0) {
    out.degree = 1;
    for (const auto& [k, c] : e.terms) {
      const long a = k[0];
      for (long i = 1; i <= a; ++i)
        out.add({a - i, i, 0}, c * Rational(binomial(a, i) * ipow(Integer(p), static_cast<unsigned long>(i))));
    }
    return out;
  }
  if (e.degree != 1) throw std::invalid_argument("cobar_d: only degrees 0 and 1 are modeled");
  out.degree = 2;
  for (const auto& [k, c] : e.terms) {
    const long a = k[0], b = k[1];
    RawTensor left;
    left[{0, 0, a, b}] = c;  // 1 (x) v^a t^b
    out += normalize(left, p);
    for (long i = 0; i <= b; ++i) out.add({a, i, b - i}, -c * Rational(binomial(b, i)));  // Delta
    out.add({a, b, 0}, c);                                                                // g (x) 1
  }
  return out;
}

CobarElement alpha_cocycle(long p, long n) {
  if (p < 5 || !is_prime(p)) throw std::invalid_argument("p must be a prime >= 5");
  if (n < 1) throw std::invalid_argument("n must be positive");
  const long nu = p_valuation(n, p);
  CobarElement s;
  s.degree = 1;
  for (long i = 1; i <= n; ++i) {
    Rational c = Rational(binomial(n, i)) * rpow(Rational(p), i - 1 - nu);
    check(is_p_integral(c, p), "alpha cocycle coefficient is not p-integral");
    s.add({n - i, i, 0}, c);
  }
  return s;
}

namespace {

std::vector<std::array<long, 3>> degree2_basis(long n) {
  std::vector<std::array<long, 3>> keys;
  for (long a = 0; a <= n; ++a)
    for (long b = 0; a + b <= n; ++b) keys.push_back({a, b, n - a - b});
  return keys;
}

std::vector<Rational> degree1_coords(const CobarElement& e, long n) {
  std::vector<Rational> v(static_cast<std::size_t>(n) + 1);
  for (const auto& [k, c] : e.terms) {
    if (k[0] + k[1] != n) throw std::invalid_argument("element not homogeneous of the expected degree");
    v[static_cast<std::size_t>(k[1])] = c;
  }
  return v;
}

CobarElement from_degree1_coords(const std::vector<Rational>& v, long n) {
  CobarElement e;
  e.degree = 1;
  for (long i = 0; i <= n; ++i) e.add({n - i, i, 0}, v[static_cast<std::size_t>(i)]);
  return e;
}

}  // namespace

ZMatrix cobar_d1_matrix(long p, long n) {
  const auto rows = degree2_basis(n);
  std::map<std::array<long, 3>, std::size_t> index;
  for (std::size_t r = 0; r < rows.size(); ++r) index[rows[r]] = r;
  ZMatrix m(rows.size(), static_cast<std::size_t>(n) + 1);
  for (long i = 0; i <= n; ++i) {
    CobarElement g;
    g.degree = 1;
    g.add({n - i, i, 0}, 1);
    for (const auto& [k, c] : cobar_d(g, p).terms) m(index.at(k), static_cast<std::size_t>(i)) = c.get_num();
  }
  return m;
}

std::vector<Integer> cobar_d0_vector(long p, long n) {
  CobarElement v;
  v.degree = 0;
  v.add({n, 0, 0}, 1);
  auto coords = degree1_coords(cobar_d(v, p), n);
  std::vector<Integer> out;
  for (const auto& c : coords) out.push_back(c.get_num());
  return out;
}

Ext1Result ext1_order(long p, long n) {
  const CobarElement sigma = alpha_cocycle(p, n);
  check(cobar_d(sigma, p).is_zero(), "sigma_n is not a cocycle");
  const ZMatrix d1 = cobar_d1_matrix(p, n);
  const auto d0 = cobar_d0_vector(p, n);
  check((d1 * d0) == std::vector<Integer>(d1.rows(), Integer(0)), "d1 d0 != 0");

  const auto snf = smith_normal_form(d1);
  Ext1Result r;
  r.kernel_rank = d1.cols() - snf.rank;
  QMatrix kernel(d1.cols(), r.kernel_rank);
  for (std::size_t c = 0; c < r.kernel_rank; ++c)
    for (std::size_t i = 0; i < d1.cols(); ++i) kernel(i, c) = snf.V(i, snf.rank + c);
  check(r.kernel_rank == 1, "cocycles in this degree do not form a rank-one lattice");
  r.kernel_generator = from_degree1_coords(kernel.col(0), n);

  std::vector<Rational> d0q(d0.begin(), d0.end());
  auto image = solve(kernel, d0q);
  check(image.has_value() && is_integral((*image)[0]), "d0(v^n) is not an integral cocycle");
  r.order = ipow(Integer(p), static_cast<unsigned long>(p_valuation((*image)[0], p).value()));

  auto s = solve(kernel, degree1_coords(sigma, n));
  check(s.has_value(), "sigma_n is not in the cocycle lattice");
  r.sigma_generates = p_valuation((*s)[0], p) == Valuation(0);
  const long nu = p_valuation(n, p);
  check(from_degree1_coords(d0q, n) == Rational(ipow(Integer(p), static_cast<unsigned long>(1 + nu))) * sigma,
        "d0(v^n) != p^(1+nu) sigma_n");
  return r;
}

ZetaResult twisted_zeta_check(long p, long n, long j) {
  if (j < 0) throw std::invalid_argument("j must be nonnegative");
  const Ext1Result ext = ext1_order(p, n);
  check(ext.sigma_generates, "sigma_n does not generate the cocycles");
  const long nu = p_valuation(n, p);
  const Integer modulus = ipow(Integer(p), static_cast<unsigned long>(1 + nu));
  const CobarElement sigma = alpha_cocycle(p, n);
  const auto d0 = cobar_d0_vector(p, n);
  QMatrix a(d0.size(), 1);
  for (std::size_t i = 0; i < d0.size(); ++i) a(i, 0) = d0[i];
  const Rational pj(ipow(Integer(p), static_cast<unsigned long>(j)));

  ZetaResult r;
  // (d0 x0 + zeta(1), 0) must equal (p^j sigma_n, 0) for some x0 = a v^n.
  for (Integer u = 0; u < modulus; ++u) {
    auto rhs = degree1_coords((pj - Rational(u)) * sigma, n);
    if (smith_solve_local(a, rhs, p)) r.solutions.push_back(u);
  }
  check(r.solutions.size() == 1, "zeta(1) is not uniquely determined");
  r.zeta1 = Rational(r.solutions.front()) * sigma;
  return r;
}

}  // namespace hecke
