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

#include <array>
#include <map>
#include <string>
#include <vector>

#include "hecke/matrix.hpp"
#include "hecke/rational.hpp"

namespace hecke {

/// Element of the cobar complex of (A, Gamma) = (Z_(p)[v], Z_(p)[v][t]) with
/// eta_R(v) = v + p t and Delta(t) = t (x) 1 + 1 (x) t, in degree 0, 1 or 2.
/// Monomial keys (a, b, c) stand for v^a (degree 0), v^a t^b (degree 1) and
/// v^a t^b (x) t^c (degree 2, left-normalized).
struct CobarElement {
  int degree = 0;
  std::map<std::array<long, 3>, Rational> terms;

  void add(const std::array<long, 3>& key, const Rational& c);
  bool is_zero() const { return terms.empty(); }
  CobarElement& operator+=(const CobarElement& o);
  CobarElement& operator-=(const CobarElement& o);
  friend CobarElement operator*(const Rational& s, CobarElement e);
  friend CobarElement operator+(CobarElement a, const CobarElement& b) { return a += b; }
  friend CobarElement operator-(CobarElement a, const CobarElement& b) { return a -= b; }
  friend bool operator==(const CobarElement& a, const CobarElement& b) {
    return a.degree == b.degree && a.terms == b.terms;
  }
  std::string to_string() const;
};

/// A degree-2 expression with coefficients on both sides:
/// key (a, b, c, e) is v^a t^b (x) v^c t^e.
using RawTensor = std::map<std::array<long, 4>, Rational>;

/// Moves every A-coefficient to the left factor via g (x) v g' = g eta_R(v) (x) g'.
CobarElement normalize(const RawTensor& e, long p);
/// A degree-2 element viewed as a raw tensor (with no right coefficients).
RawTensor as_raw(const CobarElement& e);

/// d0(a) = eta_R(a) - eta_L(a); d1(g) = 1 (x) g - Delta(g) + g (x) 1.
CobarElement cobar_d(const CobarElement& e, long p);

/// sigma_n = sum_{i=1}^n C(n, i) p^{i-1-nu_p(n)} v^{n-i} t^i.
CobarElement alpha_cocycle(long p, long n);

/// Matrix of d1 on internal degree n (columns v^{n-i} t^i, rows v^a t^b (x) t^c).
ZMatrix cobar_d1_matrix(long p, long n);
/// Column of d0(v^n) in the same degree-1 basis.
std::vector<Integer> cobar_d0_vector(long p, long n);

struct Ext1Result {
  Integer order;             // p-part of ker d1 / im d0
  std::size_t kernel_rank;   // over Z
  bool sigma_generates;      // sigma_n spans ker d1 over Z_(p)
  CobarElement kernel_generator;
};

/// H^1 in internal degree n via the Smith form of d1.
Ext1Result ext1_order(long p, long n);

struct ZetaResult {
  std::vector<Integer> solutions;  // every u in [0, p^{1+nu}) that works
  CobarElement zeta1;              // u * sigma_n for the unique u
};

/// Finds the values zeta(1) = u sigma_n (u mod p^{1+nu}) for which the
/// cocycle (p^j sigma_n, 0) is the coboundary of some (x0, -1) in the twisted
/// complex. Throws AssertionFailure unless exactly one u works.
ZetaResult twisted_zeta_check(long p, long n, long j);

}  // namespace hecke
