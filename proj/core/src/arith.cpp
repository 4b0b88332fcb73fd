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


#include <cctype>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "hecke/arith.hpp"
#include "hecke/rational.hpp"

namespace hecke {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(std::string_view text) {
  auto valid_int = [](std::string_view s) {
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    throw std::invalid_argument("not a rational: " + std::string(text));
  std::string n(num);
  if (n[0] == '+') n.erase(0, 1);
  return make_rational(Integer(n), Integer(std::string(den)));
}

std::string to_string(const Integer& x) { return x.get_str(); }

std::string to_string(const Rational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Integer ipow(const Integer& base, unsigned long exponent) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

Rational rpow(const Rational& base, long exponent) {
  if (exponent >= 0) {
    auto e = static_cast<unsigned long>(exponent);
    return make_rational(ipow(base.get_num(), e), ipow(base.get_den(), e));
  }
  if (base == 0) throw std::domain_error("zero to a negative power");
  auto e = static_cast<unsigned long>(-exponent);
  return make_rational(ipow(base.get_den(), e), ipow(base.get_num(), e));
}

long Valuation::value() const {
  if (infinite_) throw std::domain_error("valuation is infinite");
  return value_;
}

Valuation Valuation::operator+(const Valuation& other) const {
  if (infinite_ || other.infinite_) return infinity();
  return Valuation(value_ + other.value_);
}

std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
  return a.value_ <=> b.value_;
}

std::string Valuation::to_string() const { return infinite_ ? "inf" : std::to_string(value_); }

Valuation p_valuation(const Integer& x, long p) {
  if (x == 0) return Valuation::infinity();
  Integer prime(p), rest;
  auto v = mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), prime.get_mpz_t());
  return Valuation(static_cast<long>(v));
}

Valuation p_valuation(const Rational& x, long p) {
  if (x == 0) return Valuation::infinity();
  return Valuation(p_valuation(x.get_num(), p).value() - p_valuation(x.get_den(), p).value());
}

long p_valuation(long n, long p) {
  if (n == 0) throw std::domain_error("p_valuation of 0 as a machine integer");
  long v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

long next_prime(long n) {
  long c = n + 1;
  while (!is_prime(c)) ++c;
  return c;
}

std::vector<long> first_primes(std::size_t count, const std::set<long>& exclude) {
  std::vector<long> out;
  for (long q = 2; out.size() < count; q = next_prime(q))
    if (!exclude.count(q)) out.push_back(q);
  return out;
}

Integer binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Rational bernoulli(long n) {
  if (n < 0) throw std::invalid_argument("bernoulli: negative index");
  if (n > 1 && n % 2 == 1) return 0;
  static std::mutex mu;
  static std::vector<Rational> memo{Rational(1)};
  std::lock_guard lock(mu);
  // sum_{j=0}^{m} C(m+1, j) B_j = 0
  while (static_cast<long>(memo.size()) <= n) {
    long m = static_cast<long>(memo.size());
    Rational s = 0;
    for (long j = 0; j < m; ++j)
      if (memo[j] != 0) s += Rational(binomial(m + 1, j)) * memo[j];
    Rational b = -s / Rational(m + 1);
    b.canonicalize();
    memo.push_back(b);
  }
  return memo[n];
}

Integer alt_binom_sum(long n, long k) {
  if (k < 0 || n < 0 || k > n) throw std::invalid_argument("alt_binom_sum requires 0 <= k <= n");
  Integer s = 0;
  for (long i = 0; i <= n - k; ++i) {
    Integer t = binomial(n, i + k) * binomial(i + k, i);
    if (i % 2) s -= t;
    else s += t;
  }
  return s;
}

PLocalContext::PLocalContext(long p, std::set<long> inverted) : p_(p), inverted_(std::move(inverted)) {
  if (p < 5 || !is_prime(p)) throw std::invalid_argument("p must be a prime >= 5");
  for (long q : inverted_)
    if (!is_prime(q)) throw std::invalid_argument("inverted set must contain primes only");
  if (inverted_.count(p)) throw std::invalid_argument("p cannot be inverted");
}

}  // namespace hecke
