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
#include "hecke/cobar.hpp"

namespace hecke {
namespace {

CobarElement mono(int degree, long a, long b, long c = 0, const Rational& coef = 1) {
  CobarElement e;
  e.degree = degree;
  e.add({a, b, c}, coef);
  return e;
}

// p-part of the order of H^1 from a rational kernel vector made primitive
// over Z, without any Smith form.
Integer ext1_order_by_primitive_kernel(long p, long n) {
  QMatrix d1 = to_rational(cobar_d1_matrix(p, n));
  QMatrix k = nullspace(d1);
  EXPECT_EQ(k.cols(), 1u);
  Integer den = 1, g = 0;
  for (std::size_t i = 0; i < k.rows(); ++i) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), k(i, 0).get_den().get_mpz_t());
  std::vector<Integer> prim(k.rows());
  for (std::size_t i = 0; i < k.rows(); ++i) {
    prim[i] = Rational(k(i, 0) * Rational(den)).get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), prim[i].get_mpz_t());
  }
  auto d0 = cobar_d0_vector(p, n);
  // d0 = c * prim / g for a single rational c
  std::size_t lead = 0;
  while (prim[lead] == 0) ++lead;
  Rational c = Rational(d0[lead]) * Rational(g) / Rational(prim[lead]);
  return ipow(Integer(p), static_cast<unsigned long>(p_valuation(c, p).value()));
}

TEST(Cobar, ElementArithmetic) {
  auto x = mono(1, 1, 1) + mono(1, 0, 2, 0, 3);
  EXPECT_EQ(x.terms.size(), 2u);
  EXPECT_TRUE((x - x).is_zero());
  EXPECT_EQ((Rational(2) * x).terms.at({0, 2, 0}), Rational(6));
  EXPECT_THROW(x += mono(2, 0, 0), std::invalid_argument);
  EXPECT_EQ(mono(1, 1, 1).to_string(), "v1*t1");
  EXPECT_EQ((mono(2, 0, 1, 1, -5) + mono(2, 2, 0, 0)).to_string(), "-5*t1|t1 + v1^2|1");
}

TEST(Cobar, RightUnitNormalization) {
  RawTensor r;
  r[{0, 0, 1, 0}] = 1;  // 1 (x) v
  auto n = normalize(r, 5);
  EXPECT_EQ(n, mono(2, 1, 0, 0) + mono(2, 0, 1, 0, 5));
  RawTensor s;
  s[{0, 1, 2, 1}] = 1;  // t (x) v^2 t = t (v + 5t)^2 (x) t
  EXPECT_EQ(normalize(s, 5), mono(2, 2, 1, 1) + mono(2, 1, 2, 1, 10) + mono(2, 0, 3, 1, 25));
  EXPECT_EQ(normalize(as_raw(mono(2, 3, 1, 2)), 5), mono(2, 3, 1, 2));
}

TEST(Cobar, Differentials) {
  EXPECT_EQ(cobar_d(mono(0, 1, 0), 5), mono(1, 0, 1, 0, 5));
  EXPECT_TRUE(cobar_d(mono(1, 0, 1), 5).is_zero());
  // d(v) = v (x) 1 + p t (x) 1 - (v (x) 1) - ... as an element: 1 (x) v - v (x) 1 + v (x) 1
  EXPECT_EQ(cobar_d(mono(1, 1, 0), 7), mono(2, 1, 0, 0) + mono(2, 0, 1, 0, 7));
  EXPECT_THROW(cobar_d(mono(2, 0, 0), 5), std::invalid_argument);
}

TEST(Cobar, SquareOfDifferentialVanishes) {
  for (long p : {5L, 7L})
    for (long a = 0; a <= 12; ++a) EXPECT_TRUE(cobar_d(cobar_d(mono(0, a, 0), p), p).is_zero()) << p << " " << a;
}

TEST(Cobar, AlphaIsACocycle) {
  for (long p : {5L, 7L})
    for (long n = 1; n <= 10; ++n) {
      auto s = alpha_cocycle(p, n);
      EXPECT_TRUE(cobar_d(s, p).is_zero());
      EXPECT_EQ(cobar_d(mono(0, n, 0), p), Rational(ipow(Integer(p), 1 + p_valuation(n, p))) * s);
    }
  EXPECT_EQ(alpha_cocycle(5, 1), mono(1, 0, 1));
  EXPECT_THROW(alpha_cocycle(4, 1), std::invalid_argument);
}

TEST(Cobar, Ext1MatchesPrimitiveKernel) {
  for (long p : {5L, 7L})
    for (long n = 1; n <= 10; ++n) {
      auto r = ext1_order(p, n);
      EXPECT_EQ(r.kernel_rank, 1u);
      EXPECT_TRUE(r.sigma_generates);
      EXPECT_EQ(r.order, ext1_order_by_primitive_kernel(p, n)) << p << " " << n;
    }
}

TEST(Cobar, Ext1MatchesBernoulliDenominators) {
  // p-part of the denominator of B_m / m for m = (p - 1) n
  for (long p : {5L, 7L})
    for (long n = 1; n <= 10; ++n) {
      const long m = (p - 1) * n;
      Rational q = bernoulli(m) / Rational(m);
      auto v = p_valuation(q.get_den(), p).value();
      EXPECT_EQ(ext1_order(p, n).order, ipow(Integer(p), static_cast<unsigned long>(v))) << p << " " << n;
    }
}

TEST(Cobar, D1MatrixShape) {
  auto m = cobar_d1_matrix(5, 3);
  EXPECT_EQ(m.cols(), 4u);
  EXPECT_EQ(m.rows(), 10u);
  EXPECT_EQ(cobar_d0_vector(5, 2), (std::vector<Integer>{0, 10, 25}));
}

TEST(Zeta, ForcedValue) {
  struct Case {
    long p, n, j;
    long u;
  };
  for (auto c : std::vector<Case>{{5, 1, 0, 1}, {5, 5, 0, 1}, {5, 5, 1, 5}, {7, 1, 0, 1}, {5, 1, 1, 0}, {5, 5, 2, 0}, {7, 7, 2, 0}}) {
    auto r = twisted_zeta_check(c.p, c.n, c.j);
    ASSERT_EQ(r.solutions.size(), 1u);
    EXPECT_EQ(r.solutions[0], Integer(c.u)) << c.p << " " << c.n << " " << c.j;
    EXPECT_EQ(r.zeta1, Rational(c.u) * alpha_cocycle(c.p, c.n));
  }
  EXPECT_THROW(twisted_zeta_check(5, 1, -1), std::invalid_argument);
}

}  // namespace
}  // namespace hecke
