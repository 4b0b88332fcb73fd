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

#include "hecke/derived.hpp"
#include "hecke/eigenspace.hpp"

namespace hecke {
namespace {

// a_m(T_l f) for prime l, on a q-expansion; valid for m < prec / l.
std::vector<Rational> hecke_on_series(const std::vector<Rational>& f, long l, long k) {
  std::vector<Rational> g(f.size() / static_cast<std::size_t>(l));
  const Rational w = rpow(Rational(l), k - 1);
  for (std::size_t m = 0; m < g.size(); ++m) {
    g[m] = f[m * static_cast<std::size_t>(l)];
    if (m % static_cast<std::size_t>(l) == 0) g[m] += w * f[m / static_cast<std::size_t>(l)];
  }
  return g;
}

// Column j of (T_l E^n - E^n T_l) / p on M_k, computed on q-expansions.
std::vector<Rational> dn_column_by_series(long p, long n, long l, long k, std::size_t j) {
  const long s = (p - 1) * n;
  const auto dout = static_cast<std::size_t>(dim_Mk(k + s));
  const std::size_t prec = dout * static_cast<std::size_t>(l) + 1;
  QSeries en = series_power(eisenstein(p - 1, prec), static_cast<unsigned long>(n));
  QSeries g = miller_basis(k, prec)[j];
  auto lhs = hecke_on_series(series_product(en, g).coeffs(), l, k + s);
  QSeries tg(hecke_on_series(g.coeffs(), l, k));
  auto rhs = series_product(en.truncate(tg.prec()), tg).coeffs();
  std::vector<Rational> out(dout);
  for (std::size_t i = 0; i < dout; ++i) out[i] = (lhs[i] - rhs[i]) / p;
  return out;
}

Valuation min_valuation(const QMatrix& m, long p) {
  Valuation v = Valuation::infinity();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v = std::min(v, p_valuation(m(i, j), p));
  return v;
}

TEST(GradedOperator, ComposeAndMemo) {
  int calls = 0;
  GradedOperator twice(0, [&calls](long k) {
    ++calls;
    return Rational(2) * QMatrix::identity(static_cast<std::size_t>(dim_Mk(k)));
  });
  auto t2 = GradedOperator::hecke(2);
  auto c = t2.compose(twice);
  EXPECT_EQ(c.at(12), Rational(2) * hecke_matrix(12, 2));
  c.at(12);
  EXPECT_EQ(calls, 1);
  EXPECT_EQ(c.degree(), 0);
}

TEST(Commutator, ContextValidation) {
  EXPECT_THROW(CommutatorContext(3, 1), std::invalid_argument);
  EXPECT_THROW(CommutatorContext(5, 0), std::invalid_argument);
  CommutatorContext c(5, 10);
  EXPECT_EQ(c.nu(), 1);
  EXPECT_EQ(c.shift(), 40);
  EXPECT_EQ(c.e_power(12, 3), c.e_power_direct(12, 3));
}

TEST(Commutator, DeltaOfT2OnDiscriminant) {
  CommutatorContext ctx(5, 1);
  QMatrix d = apply_delta(GradedOperator::hecke(2), ctx, 12);
  ASSERT_EQ(d.rows(), 2u);
  EXPECT_EQ(d(0, 1), Rational(0));
  EXPECT_EQ(d(1, 1), Rational(48));
}

TEST(Commutator, DnMatchesSeriesComputation) {
  for (long p : {5L, 7L})
    for (long n : {1L, 2L, 3L})
      for (long l : {2L, 3L})
        for (long k : {12L, 16L}) {
          CommutatorContext ctx(p, n);
          QMatrix d = apply_Dn(GradedOperator::hecke(l), ctx, k);
          for (std::size_t j = 0; j < d.cols(); ++j) EXPECT_EQ(d.col(j), dn_column_by_series(p, n, l, k, j));
        }
}

TEST(Commutator, DeltaNIsPIntegral) {
  for (long n : {5L, 10L, 25L}) {
    CommutatorContext ctx(5, n);
    for (long l : {2L, 3L}) {
      QMatrix d = apply_Dn(GradedOperator::hecke(l), ctx, 12);
      EXPECT_GE(min_valuation(d, 5), Valuation(ctx.nu()));
      EXPECT_EQ(apply_Delta_n(GradedOperator::hecke(l), ctx, 12),
                Rational(1, static_cast<long>(ipow(Integer(5), static_cast<unsigned long>(ctx.nu())).get_si())) * d);
    }
  }
}

TEST(Hochschild, CoboundariesAreCocyclesAndAreRecovered) {
  QMatrix f(3, 2);
  f(0, 0) = 1, f(1, 0) = Rational(2, 3), f(2, 1) = -4, f(1, 1) = 7;
  auto c = hom_coboundary(lift(f), 12, 12, {2, 3, 7});
  EXPECT_TRUE(satisfies_cocycle_condition(c));
  auto w = is_coboundary(c, 5);
  ASSERT_TRUE(w);
  EXPECT_EQ(hom_coboundary(*w, 12, 12, {2, 3, 7}), c);
  // 1/5 of it is still a coboundary over Q but not over Z_(5)
  auto tiny = c.scaled(QuadraticNumber(Rational(1, 5)));
  EXPECT_FALSE(is_coboundary(tiny, 5));
  EXPECT_EQ(cochain_order_exponent(tiny, 5, 3), 1);
}

TEST(Hochschild, NonCocycleDetected) {
  HochschildCochain1 c;
  c.weight_in = 12;
  c.shift = 0;
  QMatrix junk(2, 2);
  junk(0, 1) = 1;
  c.values[2] = lift(junk);
  c.values[3] = Matrix<QuadraticNumber>(2, 2);
  EXPECT_FALSE(satisfies_cocycle_condition(c));
}

TEST(Kappa, IsACocycle) {
  CommutatorContext ctx(5, 2);
  auto k = kappa_cocycle(ctx, 12, {2, 3, 7});
  EXPECT_TRUE(satisfies_cocycle_condition(k));
  EXPECT_EQ(k.weight_out(), 20);
  EXPECT_THROW(kappa_cocycle(ctx, 12, {2, 5}), std::invalid_argument);
}

// Over Q the witness of p^(1+nu) kappa is unique when no nonzero map
// M_k -> M_{k+s} commutes with the Hecke operators, so the class order is
// p^(1+nu - min valuation of that witness).
long order_by_rational_witness(long p, long n, long k, const std::vector<long>& primes) {
  CommutatorContext ctx(p, n);
  QMatrix en = ctx.e_power_direct(k, n);
  const std::size_t dout = en.rows(), din = en.cols();
  QMatrix sys(primes.size() * dout * din, dout * din);
  std::size_t base = 0;
  for (long l : primes) {
    QMatrix to = hecke_matrix(k + ctx.shift(), l), ti = hecke_matrix(k, l);
    for (std::size_t i = 0; i < dout; ++i)
      for (std::size_t j = 0; j < din; ++j) {
        for (std::size_t a = 0; a < dout; ++a) sys(base + i * din + j, a * din + j) += to(i, a);
        for (std::size_t b = 0; b < din; ++b) sys(base + i * din + j, i * din + b) -= ti(b, j);
      }
    base += dout * din;
  }
  EXPECT_EQ(nullspace(sys).cols(), 0u);
  long v = min_valuation(en, p).value();
  return std::max(0L, 1 + ctx.nu() - v);
}

TEST(Kappa, ClassOrderMatchesRationalWitness) {
  for (auto [p, n] : std::vector<std::pair<long, long>>{{5, 1}, {5, 2}, {5, 5}, {7, 1}, {7, 7}}) {
    std::vector<long> primes;
    for (long l : {2L, 3L, 7L, 11L, 13L})
      if (l != p) primes.push_back(l);
    CommutatorContext ctx(p, n);
    auto order = class_order(ctx, 12, primes);
    EXPECT_EQ(order.exponent, order_by_rational_witness(p, n, 12, primes)) << p << " " << n;
    EXPECT_EQ(order.exponent, 1 + ctx.nu());
    EXPECT_EQ(order.order, ipow(Integer(p), static_cast<unsigned long>(order.exponent)));
  }
}

TEST(Kappa, StableUnderSmallerPrimeSets) {
  CommutatorContext ctx(5, 5);
  EXPECT_EQ(class_order(ctx, 12, {2}).exponent, 2);
  EXPECT_EQ(class_order(ctx, 12, {2, 3, 7, 11, 13, 17}).exponent, 2);
}

TEST(DotCup, DiscriminantExample) {
  // p = 5, kappa_1 on M_12, Delta pushed to weight 16.
  CommutatorContext ctx(5, 1);
  const std::vector<long> primes{2, 3, 7};
  auto kappa = kappa_cocycle(ctx, 12, primes);
  std::map<long, QuadraticNumber> tau{{2, -24}, {3, 252}, {7, -16744}};
  std::vector<QuadraticNumber> delta{0, 1};
  auto c = dotcup(delta, tau, kappa);
  EXPECT_EQ(c.bimodule.kind, BimoduleKind::Twisted);
  EXPECT_TRUE(satisfies_cocycle_condition(c));
  EXPECT_FALSE(is_coboundary(c, 5));
  auto w = is_coboundary(c.scaled(QuadraticNumber(5)), 5);
  ASSERT_TRUE(w);
  // the witness is E_4 Delta, i.e. coordinates (0, 1) in weight 16
  EXPECT_EQ(w->col(0), (std::vector<QuadraticNumber>{0, 1}));
  EXPECT_EQ(cochain_order_exponent(c, 5, 3), 1);
  // component f_l = (T_l(E4 Delta) - tau(l) E4 Delta) / 5 is 5-integral
  for (long l : primes) {
    QMatrix t = hecke_matrix(16, l);
    std::vector<Rational> fl = {t(0, 1) / 5, (t(1, 1) - tau.at(l).rational_part()) / 5};
    for (const auto& x : fl) EXPECT_TRUE(is_p_integral(x, 5));
    EXPECT_EQ(c.values.at(l).col(0), (std::vector<QuadraticNumber>{fl[0], fl[1]}));
  }
}

TEST(DotCup, RejectsNonEigenforms) {
  CommutatorContext ctx(5, 1);
  auto kappa = kappa_cocycle(ctx, 12, {2, 3});
  std::map<long, QuadraticNumber> ch{{2, -24}, {3, 252}};
  EXPECT_THROW(dotcup({1, 1}, ch, kappa), std::invalid_argument);
  EXPECT_THROW(dotcup({0, 1}, {{2, -24}}, kappa), std::invalid_argument);
}

}  // namespace
}  // namespace hecke
