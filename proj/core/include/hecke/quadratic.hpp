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

#include <string>

#include "hecke/arith.hpp"
#include "hecke/rational.hpp"

namespace hecke {

/// Squarefree part of a nonzero integer, sign kept. Trial division up to 10^6
/// followed by a perfect-square test on the cofactor.
Integer squarefree_part(const Integer& n);

/// An element a + b*sqrt(d) of Q(sqrt d), d squarefree and not 1. Rationals
/// carry d = 0. Values from different quadratic fields may only be mixed when
/// one of them is rational.
class QuadraticNumber {
 public:
  QuadraticNumber() = default;
  QuadraticNumber(long a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  QuadraticNumber(const Rational& a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  QuadraticNumber(const Integer& a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  /// d must already be squarefree and different from 0 and 1.
  QuadraticNumber(Rational a, Rational b, Integer d);

  /// sqrt(d) for a squarefree d != 0, 1.
  static QuadraticNumber sqrt_of(const Integer& d) { return QuadraticNumber(0, 1, d); }

  const Rational& rational_part() const { return a_; }
  const Rational& irrational_part() const { return b_; }
  /// 0 when the value is rational.
  const Integer& radicand() const { return d_; }
  bool is_rational() const { return b_ == 0; }

  /// The Galois conjugate a - b*sqrt(d).
  QuadraticNumber conjugate() const;
  Rational norm() const { return a_ * a_ - Rational(d_) * b_ * b_; }

  QuadraticNumber& operator+=(const QuadraticNumber& o);
  QuadraticNumber& operator-=(const QuadraticNumber& o);
  QuadraticNumber& operator*=(const QuadraticNumber& o);
  QuadraticNumber& operator/=(const QuadraticNumber& o);

  friend QuadraticNumber operator+(QuadraticNumber x, const QuadraticNumber& y) { return x += y; }
  friend QuadraticNumber operator-(QuadraticNumber x, const QuadraticNumber& y) { return x -= y; }
  friend QuadraticNumber operator*(QuadraticNumber x, const QuadraticNumber& y) { return x *= y; }
  friend QuadraticNumber operator/(QuadraticNumber x, const QuadraticNumber& y) { return x /= y; }
  friend QuadraticNumber operator-(const QuadraticNumber& x) {
    QuadraticNumber r = x;
    r.a_ = -r.a_;
    r.b_ = -r.b_;
    return r;
  }
  friend bool operator==(const QuadraticNumber& x, const QuadraticNumber& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && (x.b_ == 0 || x.d_ == y.d_);
  }

  /// min(nu_p(a), nu_p(b)); the valuation on Z_(p)[sqrt d] for odd p not dividing d.
  Valuation valuation(long p) const;
  /// True iff both rational coordinates lie in Z_(p).
  bool is_p_integral(long p) const { return hecke::is_p_integral(a_, p) && hecke::is_p_integral(b_, p); }

  /// "a" or "a+b*sqrt(d)" with fraction strings for a and b.
  std::string to_string() const;

 private:
  void normalize();
  void adopt_field(const QuadraticNumber& o);

  Rational a_;
  Rational b_;
  Integer d_;
};

/// Parses the output of QuadraticNumber::to_string.
QuadraticNumber parse_quadratic(const std::string& text);

}  // namespace hecke
