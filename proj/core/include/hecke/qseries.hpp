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

#include <cstddef>
#include <optional>
#include <vector>

#include "hecke/rational.hpp"

namespace hecke {

using IntSeries = std::vector<Integer>;

/// Karatsuba recursion bottoms out in the schoolbook loop at this length.
inline constexpr std::size_t kKaratsubaThreshold = 32;
/// Karatsuba forms the full product, the schoolbook loop only the truncated
/// half, so truncated products switch over much later.
inline constexpr std::size_t kTruncatedKaratsubaThreshold = 512;

/// First n coefficients of a * b, schoolbook.
IntSeries mul_naive(const IntSeries& a, const IntSeries& b, std::size_t n);
/// First n coefficients of a * b, Karatsuba above the threshold.
IntSeries mul_truncated(const IntSeries& a, const IntSeries& b, std::size_t n);

/// sigma_e(m) for 0 <= m < n (entry 0 is 0), by a divisor sieve.
IntSeries divisor_sums(long e, std::size_t n);

/// Integral q-expansions used by the echelon basis.
IntSeries e4_integral(std::size_t prec);
IntSeries e6_integral(std::size_t prec);
IntSeries delta_integral(std::size_t prec);

/// Truncated q-expansion a_0 + a_1 q + ... + a_{N-1} q^{N-1} over Q.
class QSeries {
 public:
  QSeries() = default;
  explicit QSeries(std::vector<Rational> coeffs, std::optional<long> weight = std::nullopt);
  static QSeries from_integers(const IntSeries& c, std::optional<long> weight = std::nullopt);
  static QSeries constant(const Rational& c, std::size_t prec, std::optional<long> weight = 0);

  std::size_t prec() const { return coeffs_.size(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& operator[](std::size_t i) const { return coeffs_.at(i); }
  std::optional<long> weight() const { return weight_; }
  void set_weight(std::optional<long> w) { weight_ = w; }

  QSeries truncate(std::size_t n) const;
  bool is_zero() const;

  QSeries& operator+=(const QSeries& o);
  QSeries& operator-=(const QSeries& o);
  QSeries& operator*=(const Rational& s);
  friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
  friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
  friend QSeries operator*(const Rational& s, QSeries a) { return a *= s; }
  friend bool operator==(const QSeries& a, const QSeries& b) {
    return a.coeffs_ == b.coeffs_ && a.weight_ == b.weight_;
  }

 private:
  std::vector<Rational> coeffs_;
  std::optional<long> weight_;
};

/// Cauchy product truncated to the smaller precision; weights add when both known.
QSeries series_product(const QSeries& f, const QSeries& g);
QSeries series_power(const QSeries& f, unsigned long e);

/// E_k = 1 - (2k / B_k) sum sigma_{k-1}(n) q^n for even k >= 4.
QSeries eisenstein(long k, std::size_t prec);

/// q prod (1 - q^n)^24, via the pentagonal number recurrence.
QSeries delta_series(std::size_t prec);

}  // namespace hecke
