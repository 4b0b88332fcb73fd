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


#include "hecke/qseries.hpp"

#include <algorithm>
#include <stdexcept>

#include "hecke/arith.hpp"

namespace hecke {
namespace {

// out[0 .. na+nb-1) += a * b
void accumulate_naive(const Integer* a, std::size_t na, const Integer* b, std::size_t nb, Integer* out) {
  for (std::size_t i = 0; i < na; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < nb; ++j) mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
}

// out[0 .. 2n-1) = a * b for two length-n inputs.
void karatsuba(const Integer* a, const Integer* b, std::size_t n, Integer* out) {
  for (std::size_t i = 0; i + 1 < 2 * n; ++i) out[i] = 0;
  if (n <= kKaratsubaThreshold) {
    accumulate_naive(a, n, b, n, out);
    return;
  }
  const std::size_t m = n / 2, h = n - m;  // h >= m
  std::vector<Integer> sa(h), sb(h);
  for (std::size_t i = 0; i < h; ++i) {
    sa[i] = a[m + i];
    sb[i] = b[m + i];
    if (i < m) {
      sa[i] += a[i];
      sb[i] += b[i];
    }
  }
  std::vector<Integer> z0(2 * m - 1), z2(2 * h - 1), z1(2 * h - 1);
  karatsuba(a, b, m, z0.data());
  karatsuba(a + m, b + m, h, z2.data());
  karatsuba(sa.data(), sb.data(), h, z1.data());
  for (std::size_t i = 0; i < z0.size(); ++i) z1[i] -= z0[i];
  for (std::size_t i = 0; i < z2.size(); ++i) z1[i] -= z2[i];
  for (std::size_t i = 0; i < z0.size(); ++i) out[i] += z0[i];
  for (std::size_t i = 0; i < z1.size(); ++i) out[m + i] += z1[i];
  for (std::size_t i = 0; i < z2.size(); ++i) out[2 * m + i] += z2[i];
}

}  // namespace

IntSeries mul_naive(const IntSeries& a, const IntSeries& b, std::size_t n) {
  IntSeries out(n);
  const std::size_t na = std::min(a.size(), n);
  for (std::size_t i = 0; i < na; ++i) {
    if (sgn(a[i]) == 0) continue;
    const std::size_t nb = std::min(b.size(), n - i);
    for (std::size_t j = 0; j < nb; ++j) mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  return out;
}

IntSeries mul_truncated(const IntSeries& a, const IntSeries& b, std::size_t n) {
  const std::size_t len = std::min(n, std::max(a.size(), b.size()));
  if (len <= kTruncatedKaratsubaThreshold || a.empty() || b.empty()) return mul_naive(a, b, n);
  IntSeries pa(len), pb(len);
  std::copy_n(a.begin(), std::min(a.size(), len), pa.begin());
  std::copy_n(b.begin(), std::min(b.size(), len), pb.begin());
  IntSeries full(2 * len - 1);
  karatsuba(pa.data(), pb.data(), len, full.data());
  full.resize(n);
  return full;
}

IntSeries divisor_sums(long e, std::size_t n) {
  if (e < 0) throw std::invalid_argument("divisor_sums: negative exponent");
  IntSeries s(n);
  for (std::size_t d = 1; d < n; ++d) {
    Integer dp = ipow(Integer(static_cast<unsigned long>(d)), static_cast<unsigned long>(e));
    for (std::size_t m = d; m < n; m += d) s[m] += dp;
  }
  return s;
}

namespace {

IntSeries eisenstein_scaled(long k, long factor, std::size_t prec) {
  IntSeries s = divisor_sums(k - 1, prec);
  for (auto& x : s) x *= factor;
  if (prec) s[0] = 1;
  return s;
}

}  // namespace

IntSeries e4_integral(std::size_t prec) { return eisenstein_scaled(4, 240, prec); }
IntSeries e6_integral(std::size_t prec) { return eisenstein_scaled(6, -504, prec); }

IntSeries delta_integral(std::size_t prec) {
  // f = prod (1 - q^n)^24 satisfies n f_n = sum_{i>=1} p_i (25 i - n) f_{n-i},
  // where p_i are the coefficients of prod (1 - q^n).
  if (prec == 0) return {};
  std::vector<std::pair<long, int>> pent;  // (exponent, sign)
  for (long m = 1;; ++m) {
    long g1 = m * (3 * m - 1) / 2, g2 = m * (3 * m + 1) / 2;
    if (g1 >= static_cast<long>(prec)) break;
    int s = (m % 2) ? -1 : 1;
    pent.emplace_back(g1, s);
    if (g2 < static_cast<long>(prec)) pent.emplace_back(g2, s);
  }
  std::sort(pent.begin(), pent.end());
  IntSeries f(prec);
  f[0] = 1;
  Integer acc, tmp;
  for (long n = 1; n + 1 < static_cast<long>(prec); ++n) {
    acc = 0;
    for (const auto& [i, s] : pent) {
      if (i > n) break;
      long w = s * (25 * i - n);
      mpz_mul_si(tmp.get_mpz_t(), f[static_cast<std::size_t>(n - i)].get_mpz_t(), w);
      acc += tmp;
    }
    mpz_divexact_ui(f[static_cast<std::size_t>(n)].get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(n));
  }
  IntSeries d(prec);
  for (std::size_t n = 1; n < prec; ++n) d[n] = f[n - 1];
  return d;
}

QSeries::QSeries(std::vector<Rational> coeffs, std::optional<long> weight)
    : coeffs_(std::move(coeffs)), weight_(weight) {
  for (auto& c : coeffs_) c.canonicalize();
}

QSeries QSeries::from_integers(const IntSeries& c, std::optional<long> weight) {
  std::vector<Rational> r(c.begin(), c.end());
  return QSeries(std::move(r), weight);
}

QSeries QSeries::constant(const Rational& c, std::size_t prec, std::optional<long> weight) {
  std::vector<Rational> r(prec);
  if (prec) r[0] = c;
  return QSeries(std::move(r), weight);
}

QSeries QSeries::truncate(std::size_t n) const {
  QSeries t = *this;
  if (n < t.coeffs_.size()) t.coeffs_.resize(n);
  return t;
}

bool QSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

QSeries& QSeries::operator+=(const QSeries& o) {
  coeffs_.resize(std::min(prec(), o.prec()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  if (weight_ != o.weight_) weight_.reset();
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& o) {
  coeffs_.resize(std::min(prec(), o.prec()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  if (weight_ != o.weight_) weight_.reset();
  return *this;
}

QSeries& QSeries::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

namespace {

// f = F / den with F integral.
Integer clear_denominators(const std::vector<Rational>& f, IntSeries& out) {
  Integer den = 1;
  for (const auto& c : f) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
  out.resize(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    mpz_divexact(out[i].get_mpz_t(), den.get_mpz_t(), f[i].get_den().get_mpz_t());
    out[i] *= f[i].get_num();
  }
  return den;
}

}  // namespace

QSeries series_product(const QSeries& f, const QSeries& g) {
  const std::size_t n = std::min(f.prec(), g.prec());
  IntSeries a, b;
  Integer da = clear_denominators(f.coeffs(), a);
  Integer db = clear_denominators(g.coeffs(), b);
  IntSeries c = mul_truncated(a, b, n);
  Integer den = da * db;
  std::vector<Rational> r(n);
  for (std::size_t i = 0; i < n; ++i) r[i] = make_rational(c[i], den);
  std::optional<long> w;
  if (f.weight() && g.weight()) w = *f.weight() + *g.weight();
  return QSeries(std::move(r), w);
}

QSeries series_power(const QSeries& f, unsigned long e) {
  std::optional<long> w0 = f.weight() ? std::optional<long>(0) : std::nullopt;
  QSeries result = QSeries::constant(1, f.prec(), w0);
  QSeries base = f;
  while (e) {
    if (e & 1) result = series_product(result, base);
    e >>= 1;
    if (e) base = series_product(base, base);
  }
  return result;
}

QSeries eisenstein(long k, std::size_t prec) {
  if (k < 4 || k % 2) throw std::invalid_argument("eisenstein: weight must be even and >= 4");
  Rational factor = Rational(-2 * k) / bernoulli(k);
  IntSeries s = divisor_sums(k - 1, prec);
  std::vector<Rational> c(prec);
  for (std::size_t n = 1; n < prec; ++n) c[n] = factor * Rational(s[n]);
  if (prec) c[0] = 1;
  return QSeries(std::move(c), k);
}

QSeries delta_series(std::size_t prec) {
  if (prec == 0) throw std::invalid_argument("delta_series: precision must be positive");
  return QSeries::from_integers(delta_integral(prec), 12);
}

}  // namespace hecke
