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


#include <gtest/gtest.h>

#include <vector>

#include "hecke/arith.hpp"
#include "hecke/rational.hpp"

namespace hecke {
namespace {

// Akiyama-Tanigawa; returns B_n with B_1 = +1/2, so callers flip n == 1.
Rational akiyama_tanigawa(long n) {
  std::vector<Rational> a(n + 1);
  for (long m = 0; m <= n; ++m) {
    a[m] = Rational(1, m + 1);
    for (long j = m; j >= 1; --j) {
      a[j - 1] = Rational(j) * (a[j - 1] - a[j]);
      a[j - 1].canonicalize();
    }
  }
  return a[0];
}

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(to_string(parse_rational("-6/4")), "-3/2");
  EXPECT_EQ(to_string(parse_rational("+7")), "7");
  EXPECT_EQ(to_string(parse_rational("0/5")), "0");
  EXPECT_THROW(parse_rational("1/-2"), std::invalid_argument);
  EXPECT_THROW(parse_rational("1.5"), std::invalid_argument);
  EXPECT_THROW(parse_rational(""), std::invalid_argument);
  EXPECT_THROW(parse_rational("3/0"), std::domain_error);
}

TEST(Rational, RoundTrip) {
  for (long a = -30; a <= 30; ++a)
    for (long b = 1; b <= 12; ++b) {
      Rational x = make_rational(a, b);
      EXPECT_EQ(parse_rational(to_string(x)), x);
    }
}

TEST(Rational, Powers) {
  EXPECT_EQ(rpow(Rational(2, 3), -2), Rational(9, 4));
  EXPECT_EQ(rpow(Rational(0), 0), Rational(1));
  EXPECT_THROW(rpow(Rational(0), -1), std::domain_error);
  EXPECT_EQ(ipow(Integer(-3), 3), Integer(-27));
}

TEST(Valuation, Basics) {
  EXPECT_EQ(p_valuation(Integer(250), 5), Valuation(3));
  EXPECT_EQ(p_valuation(Rational(3, 50), 5), Valuation(-2));
  EXPECT_TRUE(p_valuation(Integer(0), 5).is_infinite());
  EXPECT_THROW(p_valuation(Integer(0), 5).value(), std::domain_error);
  EXPECT_LT(Valuation(100), Valuation::infinity());
  EXPECT_EQ(Valuation(2) + Valuation::infinity(), Valuation::infinity());
  EXPECT_EQ(p_valuation(125L, 5), 3);
  EXPECT_EQ(Valuation::infinity().to_string(), "inf");
}

TEST(Valuation, MultiplicativeProperty) {
  for (long a = 1; a < 200; a += 7)
    for (long b = 1; b < 200; b += 11)
      for (long p : {5L, 7L})
        EXPECT_EQ(p_valuation(make_rational(a, b) * make_rational(b + 3, a + 1), p),
                  p_valuation(make_rational(a, b), p) + p_valuation(make_rational(b + 3, a + 1), p));
}

TEST(Primes, Enumeration) {
  EXPECT_EQ(first_primes(5), (std::vector<long>{2, 3, 5, 7, 11}));
  EXPECT_EQ(first_primes(3, {5}), (std::vector<long>{2, 3, 7}));
  EXPECT_EQ(next_prime(13), 17);
  EXPECT_FALSE(is_prime(1));
  EXPECT_FALSE(is_prime(91));
}

TEST(Bernoulli, KnownValues) {
  std::vector<Rational> expect = {1, Rational(-1, 2), Rational(1, 6), 0, Rational(-1, 30), 0, Rational(1, 42)};
  for (long n = 0; n < static_cast<long>(expect.size()); ++n) EXPECT_EQ(bernoulli(n), expect[n]) << n;
  EXPECT_EQ(bernoulli(12), Rational(-691, 2730));
  EXPECT_EQ(bernoulli(10), Rational(5, 66));
}

TEST(Bernoulli, MatchesAkiyamaTanigawa) {
  for (long n = 2; n <= 40; ++n) EXPECT_EQ(bernoulli(n), akiyama_tanigawa(n)) << n;
}

TEST(Bernoulli, VonStaudtClausen) {
  for (long n = 2; n <= 60; n += 2) {
    Rational s = bernoulli(n);
    for (long p = 2; p <= n + 1; ++p)
      if (is_prime(p) && n % (p - 1) == 0) s += Rational(1, p);
    s.canonicalize();
    EXPECT_TRUE(is_integral(s)) << n;
  }
}

TEST(Bernoulli, PIntegralityOfEisensteinConstant) {
  for (long p : {5L, 7L, 11L, 13L, 17L, 19L}) EXPECT_EQ(p_valuation(bernoulli(p - 1), p), Valuation(-1)) << p;
}

TEST(Binomial, AlternatingSumIsKronecker) {
  for (long n = 0; n <= 15; ++n)
    for (long k = 0; k <= n; ++k) EXPECT_EQ(alt_binom_sum(n, k), Integer(k == n ? 1 : 0)) << n << "," << k;
  EXPECT_THROW(alt_binom_sum(3, 4), std::invalid_argument);
  EXPECT_THROW(alt_binom_sum(3, -1), std::invalid_argument);
}

TEST(Binomial, Pascal) {
  for (long n = 1; n <= 30; ++n)
    for (long k = 1; k < n; ++k) EXPECT_EQ(binomial(n, k), binomial(n - 1, k) + binomial(n - 1, k - 1));
  EXPECT_EQ(binomial(5, 7), Integer(0));
}

TEST(PLocalContext, Validation) {
  EXPECT_NO_THROW(PLocalContext(5, {2, 3}));
  EXPECT_THROW(PLocalContext(3), std::invalid_argument);
  EXPECT_THROW(PLocalContext(9), std::invalid_argument);
  EXPECT_THROW(PLocalContext(7, {7}), std::invalid_argument);
  EXPECT_THROW(PLocalContext(7, {4}), std::invalid_argument);
  PLocalContext c(7);
  EXPECT_TRUE(c.in_hecke_set(5));
  EXPECT_FALSE(c.in_hecke_set(7));
}

}  // namespace
}  // namespace hecke
