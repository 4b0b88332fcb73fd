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

#include "hecke/eigenspace.hpp"
#include "hecke/topo.hpp"

namespace hecke {
namespace {

std::vector<long> primes_without(long p) {
  std::vector<long> out;
  for (long l : {2L, 3L, 5L, 7L})
    if (l != p && out.size() < 3) out.push_back(l);
  return out;
}

// Extension test by direct linear algebra: T_l - lambda(l) is invertible on
// M_k for a character of weight k' != k, so h is the unique rational
// solution for a single l; g extends iff h is p-integral.
long obstruction_exponent_by_inverse(long p, long n, long j, long kp, const Eigencharacter& g) {
  CommutatorContext ctx(p, n);
  if (j > ctx.nu()) return 0;
  const long k = kp + ctx.shift(), l = 2;
  auto t = lift(hecke_matrix(k, l));
  for (std::size_t i = 0; i < t.rows(); ++i) t(i, i) -= g.eigenvalues.at(l);
  auto gcol = Matrix<QuadraticNumber>::column(g.eigenform);
  auto c = lift(apply_Delta_n(GradedOperator::hecke(l), ctx, kp)) * gcol;
  c *= QuadraticNumber(Rational(ipow(Integer(p), static_cast<unsigned long>(j))));
  auto h = solve(t, c.col(0));
  EXPECT_TRUE(h.has_value());
  Valuation v = Valuation::infinity();
  for (const auto& x : *h) v = std::min(v, x.valuation(p));
  return v.is_infinite() ? 0 : std::max(0L, -v.value());
}

TEST(TwoCell, Shape) {
  TwoCellModule m(5, 1, 0, 16);
  EXPECT_EQ(m.bottom_dim(), 2u);
  EXPECT_EQ(m.top_dim(), 2u);
  EXPECT_EQ(m.top_weight(), 12);
  EXPECT_FALSE(m.split());
  EXPECT_TRUE(TwoCellModule(5, 1, 1, 16).split());
  EXPECT_TRUE(TwoCellModule(5, 1, 1, 16).off_diagonal(2).is_zero());
  EXPECT_EQ(TwoCellModule(5, 5, 0, 12).top_dim(), 0u);
  EXPECT_THROW(TwoCellModule(5, 1, 0, 15), std::invalid_argument);
  EXPECT_THROW(m.action(5), std::invalid_argument);
  EXPECT_THROW(m.action(4), std::invalid_argument);
  auto a = m.action(2);
  EXPECT_EQ(a.block(2, 0, 2, 2), QMatrix(2, 2));
  EXPECT_EQ(a.block(0, 0, 2, 2), hecke_matrix(16, 2));
  EXPECT_EQ(m.action_at_p().block(0, 2, 2, 2), QMatrix(2, 2));
}

TEST(TwoCell, ActionsCommute) {
  for (auto [p, n, j, k] : std::vector<std::array<long, 4>>{{5, 1, 0, 16}, {5, 2, 0, 20}, {5, 5, 1, 24}, {7, 1, 0, 18}}) {
    TwoCellModule m(p, n, j, k);
    auto ls = primes_without(p);
    for (long a : ls)
      for (long b : ls) EXPECT_EQ(m.action(a) * m.action(b), m.action(b) * m.action(a)) << p << n << j << k;
  }
}

TEST(TwoCell, PresentationsAreConjugate) {
  TwoCellModule c(5, 5, 0, 24), u(5, 5, 0, 24, Presentation::UnitConjugated);
  EXPECT_EQ(c.presentation_unit(), Rational(-1));
  TwoCellModule c2(7, 2, 0, 24), u2(7, 2, 0, 24, Presentation::UnitConjugated);
  EXPECT_EQ(c2.presentation_unit(), Rational(-2));
  EXPECT_EQ(u2.off_diagonal(2) * QMatrix::identity(u2.top_dim()), Rational(-1, 2) * c2.off_diagonal(2));
  // the same characters occur in both presentations
  auto fc = joint_eigenforms(c2, {2, 3, 5}), fu = joint_eigenforms(u2, {2, 3, 5});
  ASSERT_EQ(fc.size(), fu.size());
  for (std::size_t i = 0; i < fc.size(); ++i) EXPECT_EQ(fc[i].character, fu[i].character);
}

TEST(TwoCell, EigenformsAreEigenvectors) {
  TwoCellModule m(5, 1, 0, 16);
  auto forms = joint_eigenforms(m, {2, 3, 7});
  ASSERT_EQ(forms.size(), 4u);
  for (const auto& f : forms)
    for (long l : {2L, 3L, 7L}) {
      auto img = lift(m.action(l)) * f.vector;
      for (std::size_t i = 0; i < img.size(); ++i) EXPECT_EQ(img[i], f.character.at(l) * f.vector[i]);
    }
  EXPECT_EQ(forms[0].support, Support::BottomOnly);
  EXPECT_EQ(forms[3].support, Support::TopNontrivial);
}

TEST(TwoCell, TopFormOfDiscriminant) {
  // g = Delta at weight 12, attached below weight 16: (-E_4 Delta, 5 Delta).
  auto forms = classify_two_cell(5, 1, 0, 16, {2, 3, 7});
  const TopoEigenform* top = nullptr;
  for (const auto& f : forms)
    if (f.support == Support::TopNontrivial && f.character.at(2) == QuadraticNumber(-24)) top = &f;
  ASSERT_NE(top, nullptr);
  EXPECT_EQ(top->vector, (std::vector<QuadraticNumber>{0, -1, 0, 5}));
  EXPECT_EQ(to_string(top->support), "top-nontrivial");
}

TEST(TwoCell, ClassificationMatchesBruteForce) {
  for (long p : {5L, 7L})
    for (long n : {1L, 2L})
      for (long j = 0; j <= 1; ++j)
        for (long k : {12L, 16L, 18L, 24L}) {
          auto ls = primes_without(p);
          TwoCellModule m(p, n, j, k);
          auto brute = joint_eigenforms(m, ls);
          auto cls = classify_two_cell(p, n, j, k, ls);
          EXPECT_TRUE(same_eigenforms(brute, cls)) << p << " " << n << " " << j << " " << k;
        }
}

TEST(TwoCell, SplitCaseIsBlockDiagonal) {
  auto forms = classify_two_cell(5, 1, 1, 16, {2, 3, 7});
  ASSERT_EQ(forms.size(), 4u);
  for (const auto& f : forms) EXPECT_EQ(f.cells.size(), 1u);
}

TEST(Multiplicity, TwoCellHasMultiplicityOne) {
  for (auto [p, n, j, k] : std::vector<std::array<long, 4>>{{5, 1, 0, 16}, {5, 5, 0, 24}, {7, 1, 1, 18}}) {
    auto rep = multiplicity_one_check(TwoCellModule(p, n, j, k), primes_without(p));
    EXPECT_EQ(rep.max_rank(), 1u);
  }
}

TEST(Multiplicity, WedgeOfTwoPointsFails) {
  WedgeModule w({0, 0}, 12);
  EXPECT_EQ(w.dim(), 4u);
  auto rep = multiplicity_one_check(w, {2, 3, 7});
  EXPECT_EQ(rep.max_rank(), 2u);
  auto forms = joint_eigenforms(w, {2, 3, 7}, 5);
  EXPECT_EQ(forms.size(), 4u);
  for (const auto& f : forms) {
    EXPECT_EQ(f.eigenspace_rank, 2u);
    EXPECT_EQ(f.support, Support::Cells);
  }
  EXPECT_THROW(WedgeModule({1}, 12), std::invalid_argument);
}

TEST(Multiplicity, WedgeOfDifferentSpheres) {
  WedgeModule w({0, 8}, 16);
  EXPECT_EQ(w.cell_weight(1), 12);
  EXPECT_EQ(multiplicity_one_check(w, {2, 3}).max_rank(), 1u);
}

TEST(CompositeHecke, RankOneEigenvectors) {
  for (auto [p, n, j, k] : std::vector<std::array<long, 4>>{{5, 1, 0, 16}, {5, 2, 0, 20}, {7, 1, 0, 24}}) {
    TwoCellModule m(p, n, j, k);
    auto ls = primes_without(p);
    EXPECT_TRUE(composite_hecke_check(m, joint_eigenforms(m, ls), ls));
  }
}

TEST(CompositeHecke, DetectsWrongVector) {
  TwoCellModule m(5, 1, 0, 16);
  auto forms = joint_eigenforms(m, {2, 3});
  forms[0].vector[0] += QuadraticNumber(1);
  forms[0].vector[1] += QuadraticNumber(1);
  EXPECT_FALSE(composite_hecke_check(m, forms, {2, 3}));
}

TEST(Obstruction, DiscriminantAtFive) {
  std::map<long, QuadraticNumber> tau{{2, -24}, {3, 252}, {7, -16744}};
  std::vector<QuadraticNumber> delta{0, 1};
  auto r = extension_obstruction(5, 1, 0, 12, delta, tau, {2, 3, 7});
  EXPECT_FALSE(r.extends);
  EXPECT_EQ(r.order_exponent, 1);
  auto split = extension_obstruction(5, 1, 1, 12, delta, tau, {2, 3, 7});
  EXPECT_TRUE(split.extends);
  EXPECT_EQ(split.f0, (std::vector<QuadraticNumber>{0, 0}));
  EXPECT_EQ(extension_obstruction(5, 5, 0, 4, {1}, {{2, 9}, {3, 28}}, {2, 3}).order_exponent, 2);
  EXPECT_EQ(extension_obstruction(5, 5, 1, 4, {1}, {{2, 9}, {3, 28}}, {2, 3}).order_exponent, 1);
}

TEST(Obstruction, MatchesDirectInverse) {
  for (long p : {5L, 7L})
    for (long n : {1L, 2L, p})
      for (long kp : {0L, 4L, 12L, 16L, 24L}) {
        auto ls = primes_without(p);
        CommutatorContext ctx(p, n);
        for (long j = 0; j <= ctx.nu() + 1; ++j)
          for (const auto& g : eigencharacters(kp, ls).characters) {
            auto r = extension_obstruction(p, n, j, kp, g.eigenform, g.eigenvalues, ls);
            long direct = obstruction_exponent_by_inverse(p, n, j, kp, g);
            EXPECT_EQ(r.extends, direct == 0);
            if (!r.extends) EXPECT_EQ(r.order_exponent, direct);
          }
      }
}

TEST(Obstruction, Validation) {
  EXPECT_THROW(extension_obstruction(5, 1, -1, 12, {0, 1}, {{2, -24}}, {2}), std::invalid_argument);
  EXPECT_THROW(extension_obstruction(5, 1, 0, 12, {0, 1}, {{2, -24}}, {5}), std::invalid_argument);
  EXPECT_THROW(extension_obstruction(5, 1, 0, 12, {1, 1}, {{2, -24}}, {2}), std::invalid_argument);
}

}  // namespace
}  // namespace hecke
