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


#include "acceptance.hpp"

#include <exception>
#include <functional>
#include <numeric>
#include <sstream>

#include "hecke/arith.hpp"
#include "hecke/cobar.hpp"
#include "hecke/derived.hpp"
#include "hecke/eigenspace.hpp"
#include "hecke/modforms.hpp"
#include "hecke/qseries.hpp"
#include "hecke/topo.hpp"

namespace hecke::acceptance {
namespace {

class Tally {
 public:
  explicit Tally(CriterionResult& r) : r_(r) {}
  void expect(bool ok, const std::string& what) {
    ++r_.checks;
    if (ok) return;
    ++r_.failures;
    if (r_.detail.empty()) r_.detail = what;
  }

 private:
  CriterionResult& r_;
};

std::string label(std::initializer_list<long> xs) {
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (long x : xs) {
    os << (first ? "" : ",") << x;
    first = false;
  }
  os << ")";
  return os.str();
}

Integer p_power(long p, long e) { return ipow(Integer(p), static_cast<unsigned long>(e)); }

std::vector<long> primes_without(std::vector<long> ls, long p) {
  std::erase(ls, p);
  return ls;
}

// ---------------------------------------------------------------------------

void hecke_relations(Tally& t) {
  const std::vector<long> ls{2, 3, 5, 7, 11, 13};
  for (long k = 12; k <= 28; k += 2) {
    for (long l : ls)
      for (long m : ls) {
        if (l >= m) continue;
        t.expect(hecke_matrix(k, l * m) == hecke_matrix(k, l) * hecke_matrix(k, m),
                 "T_lm != T_l T_m at (k,l,m) = " + label({k, l, m}));
      }
    for (long l : ls) {
      QMatrix rhs = hecke_matrix(k, l) * hecke_matrix(k, l * l) - rpow(Rational(l), k - 1) * hecke_matrix(k, l);
      t.expect(hecke_matrix(k, l * l * l) == rhs, "T_{l^3} relation fails at (k,l) = " + label({k, l}));
    }
  }
}

void eisenstein_integrality(Tally& t) {
  for (long p : {5L, 7L, 11L, 13L}) {
    QSeries e = eisenstein(p - 1, 60);
    bool ok = e[0] == 1;
    for (std::size_t i = 1; i < e.prec(); ++i) ok = ok && p_valuation(e[i], p) >= Valuation(1);
    t.expect(ok, "E_{p-1} is not 1 mod p for p = " + std::to_string(p));
    t.expect(p_valuation(bernoulli(p - 1), p) == Valuation(-1), "nu_p(B_{p-1}) != -1 for p = " + std::to_string(p));
  }
}

void binomial_lemma(Tally& t) {
  for (long n = 0; n <= 15; ++n)
    for (long k = 0; k <= n; ++k)
      t.expect(alt_binom_sum(n, k) == (k == n ? 1 : 0), "alternating sum wrong at (n,k) = " + label({n, k}));
}

void dn_closed_form(Tally& t) {
  for (long p : {5L, 7L})
    for (long n = 1; n <= 6; ++n) {
      CommutatorContext ctx(p, n);
      for (long l : {2L, 3L})
        for (long k : {12L, 16L}) {
          const auto op = GradedOperator::hecke(l);
          t.expect(apply_Dn_binomial(op, ctx, k) == apply_Dn_closed(op, ctx, k),
                   "D_n routes differ at (p,n,l,k) = " + label({p, n, l, k}));
        }
    }
}

void delta_n_integrality(Tally& t) {
  for (long n : {5L, 10L, 25L}) {
    CommutatorContext ctx(5, n);
    for (long l : {2L, 3L}) {
      QMatrix d = apply_Dn(GradedOperator::hecke(l), ctx, 12);
      bool ok = true;
      for (std::size_t i = 0; i < d.rows(); ++i)
        for (std::size_t j = 0; j < d.cols(); ++j) ok = ok && p_valuation(d(i, j), 5) >= Valuation(ctx.nu());
      t.expect(ok, "5^nu does not divide D_n(T_l) at (n,l) = " + label({n, l}));
    }
  }
}

const std::vector<long> kKappaN{1, 2, 5, 7, 10};

void kappa_orders(Tally& t, const Options& opts) {
  for (long p : {5L, 7L})
    for (long n : kKappaN) {
      CommutatorContext ctx(p, n);
      const long expected = 1 + ctx.nu() + (opts.tamper_kappa_order ? 1 : 0);
      ClassOrder c = class_order(ctx, 12, primes_without({2, 3, 7, 11, 13}, p));
      t.expect(c.exponent == expected && c.order == p_power(p, expected),
               "kappa order at (p,n) = " + label({p, n}) + " is " + c.order.get_str() + ", expected " +
                   p_power(p, expected).get_str());
    }
}

void discriminant_example(Tally& t) {
  const long p = 5;
  const std::vector<long> ls{2, 3, 7};
  CommutatorContext ctx(p, 1);
  QSeries e4d = series_product(eisenstein(4, 40), delta_series(40));
  ModularForm f = ModularForm::from_series(16, e4d);
  std::vector<QuadraticNumber> fq(f.coords.begin(), f.coords.end());
  std::map<long, QuadraticNumber> tau;
  for (long l : ls) tau[l] = hecke_matrix(12, l)(1, 1);

  HochschildCochain1 kappa = kappa_cocycle(ctx, 12, ls);
  HochschildCochain1 c = dotcup({QuadraticNumber(0), QuadraticNumber(1)}, tau, kappa);
  for (long l : ls) {
    QMatrix tl = hecke_matrix(16, l);
    std::vector<Rational> img = tl * f.coords;
    bool integral = true, matches = true;
    for (std::size_t i = 0; i < img.size(); ++i) {
      Rational fl = (img[i] - tau[l].rational_part() * f.coords[i]) / p;
      integral = integral && is_p_integral(fl, p);
      matches = matches && c.values.at(l)(i, 0) == QuadraticNumber(fl);
    }
    t.expect(integral, "f_l not 5-integral at l = " + std::to_string(l));
    t.expect(matches, "dot-cup component differs from f_l at l = " + std::to_string(l));
  }
  auto w = is_coboundary(c.scaled(QuadraticNumber(p)), p);
  t.expect(w.has_value() && w->col(0) == fq, "5 (Delta dot-cup kappa) is not the coboundary of E_4 Delta");
  t.expect(!is_coboundary(c, p).has_value(), "Delta dot-cup kappa is a coboundary");
}

struct GridPoint {
  long p, n, j, k;
};

std::vector<GridPoint> two_cell_grid() {
  std::vector<GridPoint> g;
  for (long p : {5L, 7L})
    for (long n : {1L, 2L, p}) {
      const long nu = p_valuation(n, p);
      for (long j = 0; j <= nu + 1; ++j)
        for (long k = 12; k <= 28; k += 2) g.push_back({p, n, j, k});
    }
  return g;
}

std::vector<long> grid_primes(long p) { return first_primes(3, {p}); }

void classification(Tally& t) {
  for (const auto& g : two_cell_grid()) {
    const auto ls = grid_primes(g.p);
    auto brute = joint_eigenforms(TwoCellModule(g.p, g.n, g.j, g.k), ls);
    auto expected = classify_two_cell(g.p, g.n, g.j, g.k, ls);
    t.expect(same_eigenforms(brute, expected), "classification mismatch at (p,n,j,k) = " + label({g.p, g.n, g.j, g.k}));
  }
}

void multiplicity(Tally& t) {
  for (const auto& g : two_cell_grid()) {
    auto rep = multiplicity_one_check(TwoCellModule(g.p, g.n, g.j, g.k), grid_primes(g.p));
    t.expect(rep.max_rank() <= 1, "eigenspace of rank > 1 at (p,n,j,k) = " + label({g.p, g.n, g.j, g.k}));
  }
  auto wedge = multiplicity_one_check(WedgeModule({0, 0}, 12), {2, 3, 7});
  t.expect(wedge.max_rank() == 2, "S^0 v S^0 at weight 12 does not show a rank-2 eigenspace");
}

// Obstruction exponent from the unique rational solution of
// (T_l - lambda(l)) h = p^j Delta_n(T_l) g for a single l.
long direct_obstruction(const CommutatorContext& ctx, long j, long kp, const Eigencharacter& g, long l) {
  const long k = kp + ctx.shift();
  auto a = lift(hecke_matrix(k, l));
  for (std::size_t i = 0; i < a.rows(); ++i) a(i, i) -= g.eigenvalues.at(l);
  auto c = lift(apply_Delta_n(GradedOperator::hecke(l), ctx, kp)) * g.eigenform;
  const QuadraticNumber pj(Rational(p_power(ctx.p(), j)));
  for (auto& x : c) x *= pj;
  auto h = solve(a, c);
  check(h.has_value(), "T_l - lambda is singular across weights");
  Valuation v = Valuation::infinity();
  for (const auto& x : *h) v = std::min(v, x.valuation(ctx.p()));
  return v.is_infinite() ? 0 : std::max(0L, -v.value());
}

void obstruction_consistency(Tally& t) {
  for (const auto& g : two_cell_grid()) {
    TwoCellModule m(g.p, g.n, g.j, g.k);
    if (m.top_dim() == 0) continue;
    const auto ls = grid_primes(g.p);
    const auto forms = joint_eigenforms(m, ls);
    for (const auto& ch : eigencharacters(m.top_weight(), ls).characters) {
      const std::string where = label({g.p, g.n, g.j, g.k}) + " character at 2 = " + ch.eigenvalues.at(ls[0]).to_string();
      ExtensionResult r = extension_obstruction(g.p, g.n, g.j, m.top_weight(), ch.eigenform, ch.eigenvalues, ls);
      const TopoEigenform* member = nullptr;
      for (const auto& f : forms) {
        if (f.support != Support::TopNontrivial || !(f.character == ch.eigenvalues)) continue;
        std::vector<QuadraticNumber> top(f.vector.begin() + static_cast<std::ptrdiff_t>(m.bottom_dim()), f.vector.end());
        if (top == ch.eigenform) member = &f;
      }
      t.expect(r.extends == (member != nullptr), "verdict disagrees with eigenform membership at " + where);
      if (r.extends && member) {
        std::vector<QuadraticNumber> bottom(member->vector.begin(),
                                            member->vector.begin() + static_cast<std::ptrdiff_t>(m.bottom_dim()));
        t.expect(bottom == r.f0, "extension f0 differs from the eigenform's bottom at " + where);
      }
      const long direct = direct_obstruction(m.context(), g.j, m.top_weight(), ch, ls[0]);
      t.expect(r.extends == (direct == 0), "verdict disagrees with the direct dot-cup kernel at " + where);
      if (!r.extends) t.expect(r.order_exponent == direct, "obstruction order differs from direct solve at " + where);
    }
  }
}

void cobar(Tally& t) {
  for (long p : {5L, 7L})
    for (long n = 1; n <= 10; ++n) {
      t.expect(cobar_d(alpha_cocycle(p, n), p).is_zero(), "d1(sigma_n) != 0 at (p,n) = " + label({p, n}));
      Ext1Result e = ext1_order(p, n);
      t.expect(e.order == p_power(p, 1 + p_valuation(n, p)), "Ext^1 order wrong at (p,n) = " + label({p, n}));
    }
  for (long p : {5L, 7L})
    for (long n : kKappaN) {
      CommutatorContext ctx(p, n);
      ClassOrder c = class_order(ctx, 12, primes_without({2, 3, 7, 11, 13}, p));
      t.expect(ext1_order(p, n).order == c.order, "Ext^1 order != kappa order at (p,n) = " + label({p, n}));
    }
}

void zeta(Tally& t) {
  for (auto [p, n, j] : std::vector<std::array<long, 3>>{{5, 1, 0}, {5, 5, 0}, {5, 5, 1}, {7, 1, 0}}) {
    ZetaResult z = twisted_zeta_check(p, n, j);
    t.expect(z.solutions.size() == 1 && z.zeta1 == Rational(p_power(p, j)) * alpha_cocycle(p, n),
             "zeta(1) != p^j sigma_n at (p,n,j) = " + label({p, n, j}));
  }
  for (auto [p, n] : std::vector<std::array<long, 2>>{{5, 1}, {5, 5}, {7, 1}}) {
    const long j = p_valuation(n, p) + 1;
    ZetaResult z = twisted_zeta_check(p, n, j);
    t.expect(z.solutions.size() == 1 && z.zeta1.is_zero(), "zeta(1) != 0 at (p,n,j) = " + label({p, n, j}));
  }
}

struct Criterion {
  const char* name;
  std::function<void(Tally&, const Options&)> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {"Hecke relations", [](Tally& t, const Options&) { hecke_relations(t); }},
      {"Eisenstein integrality", [](Tally& t, const Options&) { eisenstein_integrality(t); }},
      {"Binomial lemma", [](Tally& t, const Options&) { binomial_lemma(t); }},
      {"D_n closed form", [](Tally& t, const Options&) { dn_closed_form(t); }},
      {"Integrality of Delta_n", [](Tally& t, const Options&) { delta_n_integrality(t); }},
      {"kappa orders", kappa_orders},
      {"Discriminant dot-cup example", [](Tally& t, const Options&) { discriminant_example(t); }},
      {"Two-cell classification", [](Tally& t, const Options&) { classification(t); }},
      {"Multiplicity one", [](Tally& t, const Options&) { multiplicity(t); }},
      {"Obstruction consistency", [](Tally& t, const Options&) { obstruction_consistency(t); }},
      {"Cobar Ext^1", [](Tally& t, const Options&) { cobar(t); }},
      {"zeta forcing", [](Tally& t, const Options&) { zeta(t); }},
  };
  return all;
}

}  // namespace

CriterionResult run_one(int id, const Options& opts) {
  CriterionResult r;
  r.id = id;
  if (id < 1 || id > kCriteria) {
    r.detail = "no such criterion";
    return r;
  }
  const auto& c = criteria()[static_cast<std::size_t>(id - 1)];
  r.name = c.name;
  Tally t(r);
  try {
    c.run(t, opts);
  } catch (const AssertionFailure& e) {
    t.expect(false, std::string("assertion failed: ") + e.what());
  } catch (const std::exception& e) {
    t.expect(false, std::string("error: ") + e.what());
  }
  r.passed = r.failures == 0 && r.checks > 0;
  if (r.passed) r.detail = std::to_string(r.checks) + " checks";
  return r;
}

std::vector<CriterionResult> run_all(const Options& opts) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriteria; ++id) out.push_back(run_one(id, opts));
  return out;
}

}  // namespace hecke::acceptance
