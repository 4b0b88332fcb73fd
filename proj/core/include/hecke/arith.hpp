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

#include <compare>
#include <set>
#include <string>
#include <vector>

#include "hecke/rational.hpp"

namespace hecke {

/// A p-adic valuation: an integer or +infinity (the valuation of zero).
class Valuation {
 public:
  explicit Valuation(long v) : value_(v) {}
  static Valuation infinity() {
    Valuation v(0);
    v.infinite_ = true;
    return v;
  }

  bool is_infinite() const { return infinite_; }
  /// Throws std::domain_error on +infinity.
  long value() const;

  Valuation operator+(const Valuation& other) const;

  friend bool operator==(const Valuation& a, const Valuation& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend std::strong_ordering operator<=>(const Valuation& a, const Valuation& b);

  std::string to_string() const;

 private:
  long value_;
  bool infinite_ = false;
};

Valuation p_valuation(const Integer& x, long p);
Valuation p_valuation(const Rational& x, long p);

/// nu_p(n) for a nonzero machine integer.
long p_valuation(long n, long p);

/// True iff x lies in Z_(p), i.e. p does not divide its denominator.
inline bool is_p_integral(const Rational& x, long p) {
  return mpz_divisible_ui_p(x.get_den().get_mpz_t(), static_cast<unsigned long>(p)) == 0;
}

bool is_prime(long n);
/// Smallest prime strictly greater than n.
long next_prime(long n);
/// The first `count` primes, skipping those in `exclude`.
std::vector<long> first_primes(std::size_t count, const std::set<long>& exclude = {});

Integer binomial(long n, long k);

/// Exact Bernoulli number B_n from the defining recurrence, memoized.
/// Odd n > 1 returns 0; B_1 = -1/2.
Rational bernoulli(long n);

/// sum_{i=0}^{n-k} (-1)^i C(n, i+k) C(i+k, i), which is [k == n].
/// Throws std::invalid_argument unless 0 <= k <= n.
Integer alt_binom_sum(long n, long k);

/// The prime p under study together with the finite set of primes inverted
/// in the coefficient ring (the cofinite set P is "all primes except p").
class PLocalContext {
 public:
  /// Throws std::invalid_argument if p < 5, p is composite, or p is inverted.
  explicit PLocalContext(long p, std::set<long> inverted = {});

  long p() const { return p_; }
  const std::set<long>& inverted_primes() const { return inverted_; }
  /// Primes ell != p are units of Z_(p); membership test for the cofinite P.
  bool in_hecke_set(long ell) const { return ell != p_ && is_prime(ell); }

 private:
  long p_;
  std::set<long> inverted_;
};

}  // namespace hecke
