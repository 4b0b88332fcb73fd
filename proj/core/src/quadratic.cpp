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


#include "hecke/quadratic.hpp"

#include <algorithm>
#include <stdexcept>

namespace hecke {

Integer squarefree_part(const Integer& n) {
  if (n == 0) throw std::domain_error("squarefree part of 0");
  Integer m = abs(n);
  Integer out = 1;
  for (unsigned long q = 2; q <= 1000000 && Integer(q) * q <= m; ++q) {
    if (mpz_divisible_ui_p(m.get_mpz_t(), q) == 0) continue;
    unsigned long e = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), q) != 0) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), q);
      ++e;
    }
    if (e % 2) out *= q;
  }
  if (m > 1 && mpz_perfect_square_p(m.get_mpz_t()) == 0) out *= m;
  return n < 0 ? Integer(-out) : out;
}

QuadraticNumber::QuadraticNumber(Rational a, Rational b, Integer d) : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
  if (d_ == 0 || d_ == 1) throw std::invalid_argument("quadratic radicand must differ from 0 and 1");
  normalize();
}

void QuadraticNumber::normalize() {
  if (b_ == 0) d_ = 0;
}

void QuadraticNumber::adopt_field(const QuadraticNumber& o) {
  if (o.b_ == 0) return;
  if (b_ == 0) {
    d_ = o.d_;
    return;
  }
  if (d_ != o.d_) throw std::domain_error("mixing different quadratic fields");
}

QuadraticNumber QuadraticNumber::conjugate() const {
  QuadraticNumber r = *this;
  r.b_ = -r.b_;
  return r;
}

QuadraticNumber& QuadraticNumber::operator+=(const QuadraticNumber& o) {
  adopt_field(o);
  a_ += o.a_;
  b_ += o.b_;
  normalize();
  return *this;
}

QuadraticNumber& QuadraticNumber::operator-=(const QuadraticNumber& o) {
  adopt_field(o);
  a_ -= o.a_;
  b_ -= o.b_;
  normalize();
  return *this;
}

QuadraticNumber& QuadraticNumber::operator*=(const QuadraticNumber& o) {
  adopt_field(o);
  Rational a = a_ * o.a_ + Rational(d_) * b_ * o.b_;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  normalize();
  return *this;
}

QuadraticNumber& QuadraticNumber::operator/=(const QuadraticNumber& o) {
  Rational nrm = o.norm();
  if (nrm == 0) throw std::domain_error("division by zero");
  *this *= o.conjugate();
  a_ /= nrm;
  b_ /= nrm;
  normalize();
  return *this;
}

Valuation QuadraticNumber::valuation(long p) const {
  return std::min(p_valuation(a_, p), p_valuation(b_, p));
}

std::string QuadraticNumber::to_string() const {
  if (b_ == 0) return hecke::to_string(a_);
  std::string out;
  if (a_ != 0) out = hecke::to_string(a_) + (b_ > 0 ? "+" : "");
  return out + hecke::to_string(b_) + "*sqrt(" + d_.get_str() + ")";
}

QuadraticNumber parse_quadratic(const std::string& text) {
  auto pos = text.find("*sqrt(");
  if (pos == std::string::npos) return QuadraticNumber(parse_rational(text));
  if (text.back() != ')') throw std::invalid_argument("bad quadratic number: " + text);
  Integer d(text.substr(pos + 6, text.size() - pos - 7));
  std::string head = text.substr(0, pos);
  // The rational part ends at the last sign that is not the leading one.
  auto split = head.find_last_of("+-");
  Rational a = 0;
  Rational b;
  if (split == std::string::npos || split == 0) {
    b = parse_rational(head);
  } else {
    a = parse_rational(head.substr(0, split));
    b = parse_rational(head.substr(split));
  }
  return QuadraticNumber(a, b, d);
}

}  // namespace hecke
