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
#include <vector>

#include "hecke/matrix.hpp"
#include "hecke/quadratic.hpp"

namespace hecke {

/// Dense univariate polynomial over Q, coefficients low degree first.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  static Polynomial x() { return Polynomial({Rational(0), Rational(1)}); }
  static Polynomial constant(const Rational& c) { return Polynomial({c}); }

  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  const Rational& leading() const { return c_.back(); }

  Rational operator()(const Rational& x) const;
  QuadraticNumber operator()(const QuadraticNumber& x) const;

  Polynomial derivative() const;
  Polynomial monic() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  /// "x^2-1080*x-20468736" style, highest degree first.
  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

struct DivMod {
  Polynomial quotient;
  Polynomial remainder;
};
DivMod divmod(const Polynomial& a, const Polynomial& b);
/// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);
/// Product of the distinct monic irreducible factors.
Polynomial squarefree(const Polynomial& p);

/// Characteristic polynomial det(x I - A), Faddeev-LeVerrier.
Polynomial charpoly(const QMatrix& a);

/// Distinct real roots of a nonzero polynomial that lie in Q or in a real
/// quadratic field, found by exact Sturm isolation. Factors whose roots are
/// not of that shape are returned unexpanded.
struct RootSplit {
  struct Root {
    QuadraticNumber value;
    Polynomial minimal_polynomial;  // monic, degree 1 or 2
    int choice = 0;                 // 0: +sqrt branch, 1: -sqrt branch
  };
  std::vector<Root> roots;
  std::vector<Polynomial> not_enumerated;
};
RootSplit split_roots(const Polynomial& p);

/// Number of distinct real roots in the half-open interval (a, b].
std::size_t count_real_roots(const Polynomial& p, const Rational& a, const Rational& b);

}  // namespace hecke
