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


#include "hecke/derived.hpp"

#include <stdexcept>
#include <string>

#include "hecke/eigenspace.hpp"
#include "hecke/smith.hpp"

namespace hecke {

GradedOperator::GradedOperator(long degree, std::function<QMatrix(long)> at_weight)
    : degree_(degree),
      fn_(std::make_shared<std::function<QMatrix(long)>>(std::move(at_weight))),
      memo_(std::make_shared<std::map<long, QMatrix>>()) {}

GradedOperator GradedOperator::hecke(long n) {
  return GradedOperator(0, [n](long k) { return hecke_matrix(k, n); });
}

const QMatrix& GradedOperator::at(long k) const {
  auto it = memo_->find(k);
  if (it == memo_->end()) it = memo_->emplace(k, (*fn_)(k)).first;
  return it->second;
}

GradedOperator GradedOperator::compose(const GradedOperator& other) const {
  GradedOperator self = *this;
  GradedOperator first = other;
  return GradedOperator(degree_ + other.degree_,
                        [self, first](long k) { return self.at(k + first.degree()) * first.at(k); });
}

namespace {

QSeries e_series(long p, std::size_t prec) { return eisenstein(p - 1, prec); }

QMatrix divide(QMatrix m, const Rational& s) {
  const Rational inv = 1 / s;
  m *= inv;
  return m;
}

void check_p_integral(const QMatrix& m, long p, const std::string& what) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) check(is_p_integral(m(i, j), p), what);
}

}  // namespace

CommutatorContext::CommutatorContext(long p, long n)
    : p_(p),
      n_(n),
      nu_(0),
      mu_(p),
      e_(p - 1, [p](long k) {
        const auto dout = static_cast<std::size_t>(dim_Mk(k + p - 1));
        return multiplication_matrix(e_series(p, std::max<std::size_t>(dout, 1)), p - 1, k);
      }) {
  PLocalContext validate(p);
  if (n < 1) throw std::invalid_argument("n must be a positive integer");
  nu_ = p_valuation(n, p);
  QSeries e = e_series(p, 60);
  check(e[0] == 1, "E_{p-1} must have constant term 1");
  for (std::size_t i = 1; i < e.prec(); ++i) check(p_valuation(e[i], p) >= Valuation(1), "E_{p-1} is not 1 mod p");
}

QMatrix CommutatorContext::e_power(long k, long m) const {
  QMatrix acc = QMatrix::identity(static_cast<std::size_t>(dim_Mk(k)));
  for (long i = 0; i < m; ++i) acc = e_.at(k + i * (p_ - 1)) * acc;
  return acc;
}

QMatrix CommutatorContext::e_power_direct(long k, long m) const {
  const long w = (p_ - 1) * m;
  const auto dout = static_cast<std::size_t>(dim_Mk(k + w));
  QSeries em = series_power(e_series(p_, std::max<std::size_t>(dout, 1)), static_cast<unsigned long>(m));
  return multiplication_matrix(em, w, k);
}

GradedOperator mu_delta(const GradedOperator& s, const CommutatorContext& ctx) {
  GradedOperator e = ctx.e();
  const long ew = ctx.e_weight();
  return GradedOperator(s.degree() + ew, [s, e, ew](long k) {
    return s.at(k + ew) * e.at(k) - e.at(k + s.degree()) * s.at(k);
  });
}

QMatrix apply_delta(const GradedOperator& t, const CommutatorContext& ctx, long k) {
  QMatrix r = divide(mu_delta(t, ctx).at(k), ctx.mu());
  check_p_integral(r, ctx.p(), "delta(T) is not p-integral");
  return r;
}

QMatrix apply_Dn_binomial(const GradedOperator& t, const CommutatorContext& ctx, long k) {
  const long n = ctx.n(), ew = ctx.e_weight();
  const auto dout = static_cast<std::size_t>(dim_Mk(k + t.degree() + ctx.shift()));
  const auto din = static_cast<std::size_t>(dim_Mk(k));
  QMatrix sum(dout, din);
  GradedOperator iterate = t;
  for (long i = 1; i <= n; ++i) {
    iterate = mu_delta(iterate, ctx);
    const QMatrix lead = ctx.e_power(k + t.degree() + i * ew, n - i) * iterate.at(k);
    sum += Rational(binomial(n, i)) * lead;
  }
  return divide(sum, ctx.mu());
}

QMatrix apply_Dn_closed(const GradedOperator& t, const CommutatorContext& ctx, long k) {
  const long n = ctx.n();
  return divide(t.at(k + ctx.shift()) * ctx.e_power_direct(k, n) - ctx.e_power_direct(k + t.degree(), n) * t.at(k),
                ctx.mu());
}

QMatrix apply_Dn(const GradedOperator& t, const CommutatorContext& ctx, long k) {
  QMatrix closed = apply_Dn_closed(t, ctx, k);
  check(apply_Dn_binomial(t, ctx, k) == closed,
        "D_n: binomial sum differs from (T e^n - e^n T)/mu at weight " + std::to_string(k));
  return closed;
}

QMatrix apply_Delta_n(const GradedOperator& t, const CommutatorContext& ctx, long k) {
  QMatrix d = apply_Dn(t, ctx, k);
  QMatrix r = divide(d, Rational(ipow(Integer(ctx.p()), static_cast<unsigned long>(ctx.nu()))));
  check_p_integral(r, ctx.p(), "D_n(T) is not divisible by p^nu_p(n)");
  return r;
}

std::vector<long> HochschildCochain1::primes() const {
  std::vector<long> out;
  for (const auto& kv : values) out.push_back(kv.first);
  return out;
}

HochschildCochain1 HochschildCochain1::scaled(const QuadraticNumber& s) const {
  HochschildCochain1 c = *this;
  for (auto& kv : c.values) kv.second *= s;
  return c;
}

bool satisfies_cocycle_condition(const HochschildCochain1& c) {
  const long kin = c.weight_in, kout = c.weight_out();
  for (const auto& [l1, v1] : c.values)
    for (const auto& [l2, v2] : c.values) {
      if (l2 <= l1) continue;
      const auto to1 = lift(hecke_matrix(kout, l1)), to2 = lift(hecke_matrix(kout, l2));
      if (c.bimodule.kind == BimoduleKind::HomMM) {
        const auto ti1 = lift(hecke_matrix(kin, l1)), ti2 = lift(hecke_matrix(kin, l2));
        if (!(to1 * v2 - v2 * ti1 == to2 * v1 - v1 * ti2)) return false;
      } else {
        const auto& lam1 = c.bimodule.character.at(l1);
        const auto& lam2 = c.bimodule.character.at(l2);
        if (!(to1 * v2 - lam1 * v2 == to2 * v1 - lam2 * v1)) return false;
      }
    }
  return true;
}

HochschildCochain1 kappa_cocycle(const CommutatorContext& ctx, long k, const std::vector<long>& primes) {
  HochschildCochain1 c;
  c.weight_in = k;
  c.shift = ctx.shift();
  for (long l : primes) {
    if (l == ctx.p()) throw std::invalid_argument("kappa_cocycle: generator l must differ from p");
    c.values[l] = lift(apply_Delta_n(GradedOperator::hecke(l), ctx, k));
  }
  check(satisfies_cocycle_condition(c), "kappa cochain fails the cocycle condition");
  return c;
}

HochschildCochain1 hom_coboundary(const Matrix<QuadraticNumber>& f, long k, long s, const std::vector<long>& primes) {
  HochschildCochain1 c;
  c.weight_in = k;
  c.shift = s;
  for (long l : primes) c.values[l] = lift(hecke_matrix(k + s, l)) * f - f * lift(hecke_matrix(k, l));
  return c;
}

std::optional<Matrix<QuadraticNumber>> is_coboundary(const HochschildCochain1& c, long p) {
  const auto dout = static_cast<std::size_t>(dim_Mk(c.weight_out()));
  const auto din = static_cast<std::size_t>(dim_Mk(c.weight_in));
  const std::size_t nl = c.values.size();
  if (c.bimodule.kind == BimoduleKind::HomMM) {
    // Unknown F, row-major: F(a, b) is unknown a * din + b.
    Matrix<QuadraticNumber> sys(nl * dout * din, dout * din);
    std::vector<QuadraticNumber> rhs(nl * dout * din);
    std::size_t base = 0;
    for (const auto& [l, v] : c.values) {
      const QMatrix to = hecke_matrix(c.weight_out(), l), ti = hecke_matrix(c.weight_in, l);
      for (std::size_t i = 0; i < dout; ++i)
        for (std::size_t j = 0; j < din; ++j) {
          const std::size_t row = base + i * din + j;
          for (std::size_t a = 0; a < dout; ++a) sys(row, a * din + j) += QuadraticNumber(to(i, a));
          for (std::size_t b = 0; b < din; ++b) sys(row, i * din + b) -= QuadraticNumber(ti(b, j));
          rhs[row] = v(i, j);
        }
      base += dout * din;
    }
    auto x = smith_solve_local(sys, rhs, p);
    if (!x) return std::nullopt;
    Matrix<QuadraticNumber> f(dout, din);
    for (std::size_t a = 0; a < dout; ++a)
      for (std::size_t b = 0; b < din; ++b) f(a, b) = (*x)[a * din + b];
    return f;
  }
  Matrix<QuadraticNumber> sys(nl * dout, dout);
  std::vector<QuadraticNumber> rhs(nl * dout);
  std::size_t base = 0;
  for (const auto& [l, w] : c.values) {
    const QMatrix t = hecke_matrix(c.weight_out(), l);
    const QuadraticNumber& lam = c.bimodule.character.at(l);
    for (std::size_t i = 0; i < dout; ++i) {
      for (std::size_t a = 0; a < dout; ++a) sys(base + i, a) = QuadraticNumber(t(i, a));
      sys(base + i, i) -= lam;
      rhs[base + i] = w(i, 0);
    }
    base += dout;
  }
  auto x = smith_solve_local(sys, rhs, p);
  if (!x) return std::nullopt;
  return Matrix<QuadraticNumber>::column(*x);
}

std::optional<long> cochain_order_exponent(const HochschildCochain1& c, long p, long max_exponent) {
  QuadraticNumber scale = 1;
  for (long m = 0; m <= max_exponent; ++m, scale *= QuadraticNumber(p))
    if (is_coboundary(c.scaled(scale), p)) return m;
  return std::nullopt;
}

ClassOrder class_order(const CommutatorContext& ctx, long k, const std::vector<long>& primes) {
  const long p = ctx.p(), expected = 1 + ctx.nu();
  HochschildCochain1 kappa = kappa_cocycle(ctx, k, primes);
  Matrix<QuadraticNumber> en = lift(ctx.e_power_direct(k, ctx.n()));
  const QuadraticNumber pe(Rational(ipow(Integer(p), static_cast<unsigned long>(expected))));
  check(kappa.scaled(pe) == hom_coboundary(en, k, ctx.shift(), primes),
        "p^(1+nu) kappa differs from the coboundary of e^n");

  std::optional<long> found;
  QuadraticNumber scale = 1;
  for (long m = 0; m <= expected + 2; ++m, scale *= QuadraticNumber(p)) {
    auto w = is_coboundary(kappa.scaled(scale), p);
    if (w && !found) found = m;
    if (m == expected) {
      check(w.has_value(), "p^(1+nu) kappa is not a coboundary");
      check(*w == en, "coboundary witness at p^(1+nu) is not multiplication by E^n");
    }
    if (found && m >= expected) break;
  }
  check(found.has_value(), "no coboundary found in the searched range");
  return {*found, ipow(Integer(p), static_cast<unsigned long>(*found)), primes};
}

HochschildCochain1 dotcup(const std::vector<QuadraticNumber>& f, const std::map<long, QuadraticNumber>& character,
                          const HochschildCochain1& c) {
  if (c.bimodule.kind != BimoduleKind::HomMM) throw std::invalid_argument("dotcup: cochain must be Hom(M, M)-valued");
  if (static_cast<long>(f.size()) != dim_Mk(c.weight_in)) throw std::invalid_argument("dotcup: form has wrong weight");
  HochschildCochain1 out;
  out.weight_in = c.weight_in;
  out.shift = c.shift;
  out.bimodule.kind = BimoduleKind::Twisted;
  const auto fcol = Matrix<QuadraticNumber>::column(f);
  for (const auto& [l, v] : c.values) {
    auto it = character.find(l);
    if (it == character.end()) throw std::invalid_argument("dotcup: character missing at l = " + std::to_string(l));
    if (!(lift(hecke_matrix(c.weight_in, l)) * fcol == it->second * fcol))
      throw std::invalid_argument("dotcup: form is not an eigenform at l = " + std::to_string(l));
    out.bimodule.character[l] = it->second;
    out.values[l] = v * fcol;
  }
  check(satisfies_cocycle_condition(out), "dot-cup cochain fails the twisted cocycle condition");
  return out;
}

}  // namespace hecke
