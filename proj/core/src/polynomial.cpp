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


#include "hecke/polynomial.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

namespace hecke {

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

QuadraticNumber Polynomial::operator()(const QuadraticNumber& x) const {
  QuadraticNumber acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + QuadraticNumber(*it);
  return acc;
}

Polynomial Polynomial::derivative() const {
  std::vector<Rational> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<long>(i));
  return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
  if (c_.empty()) return *this;
  Polynomial m = *this;
  Rational lead = c_.back();
  for (auto& x : m.c_) x /= lead;
  return m;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
  return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return Polynomial(std::move(c));
}

std::string Polynomial::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (long i = degree(); i >= 0; --i) {
    const Rational& a = c_[static_cast<std::size_t>(i)];
    if (a == 0) continue;
    bool first = out.empty();
    Rational mag = abs(a);
    if (a < 0) out += "-";
    else if (!first) out += "+";
    if (i == 0 || mag != 1) {
      out += hecke::to_string(mag);
      if (i > 0) out += "*";
    }
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

DivMod divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> r = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  if (r.size() < bc.size()) return {Polynomial(), a};
  std::vector<Rational> q(r.size() - db);
  for (std::size_t i = r.size(); i-- > db;) {
    Rational f = r[i] / bc.back();
    q[i - db] = f;
    if (f == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) r[i - db + j] -= f * bc[j];
  }
  r.resize(db);
  return {Polynomial(std::move(q)), Polynomial(std::move(r))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial r = divmod(x, y).remainder;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Polynomial squarefree(const Polynomial& p) {
  if (p.degree() <= 0) return p.monic();
  return divmod(p, gcd(p, p.derivative())).quotient.monic();
}

Polynomial charpoly(const QMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("charpoly: matrix not square");
  const std::size_t n = a.rows();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  QMatrix m(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m;
    for (std::size_t i = 0; i < n; ++i) m(i, i) += c[n - k + 1];
    QMatrix am = a * m;
    Rational tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
    c[n - k] = -tr / Rational(static_cast<long>(k));
  }
  return Polynomial(std::move(c));
}

namespace {

int sign(const Rational& x) { return sgn(x); }

std::vector<Polynomial> sturm_chain(const Polynomial& p) {
  std::vector<Polynomial> chain{p, p.derivative()};
  while (!chain.back().is_zero()) {
    Polynomial r = divmod(chain[chain.size() - 2], chain.back()).remainder;
    chain.push_back(Polynomial() - r);
  }
  chain.pop_back();
  return chain;
}

std::size_t sign_changes(const std::vector<Polynomial>& chain, const Rational& x) {
  std::size_t changes = 0;
  int last = 0;
  for (const auto& s : chain) {
    int v = sign(s(x));
    if (v == 0) continue;
    if (last != 0 && v != last) ++changes;
    last = v;
  }
  return changes;
}

struct Interval {
  Rational lo, hi;  // root in (lo, hi]
};

}  // namespace

std::size_t count_real_roots(const Polynomial& p, const Rational& a, const Rational& b) {
  auto chain = sturm_chain(squarefree(p));
  return sign_changes(chain, a) - sign_changes(chain, b);
}

RootSplit split_roots(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("split_roots of the zero polynomial");
  RootSplit out;
  Polynomial sf = squarefree(p);
  const long d = sf.degree();
  if (d <= 0) return out;

  // y = c x turns sf into a monic integer polynomial q.
  Integer c = 1;
  for (const auto& a : sf.coeffs()) mpz_lcm(c.get_mpz_t(), c.get_mpz_t(), a.get_den().get_mpz_t());
  std::vector<Rational> qc(static_cast<std::size_t>(d) + 1);
  for (long i = 0; i <= d; ++i) qc[static_cast<std::size_t>(i)] = sf.coeff(static_cast<std::size_t>(i)) * Rational(ipow(c, static_cast<unsigned long>(d - i)));
  Polynomial q(qc);

  Rational bound = 0;
  for (long i = 0; i < d; ++i) bound = std::max(bound, Rational(abs(qc[static_cast<std::size_t>(i)])));
  bound += 1;
  const Rational eps = Rational(1) / (Rational(8) * (bound + 1));

  auto chain = sturm_chain(q);
  std::vector<Interval> work{{-bound, bound}}, isolated;
  while (!work.empty()) {
    Interval iv = work.back();
    work.pop_back();
    std::size_t cnt = sign_changes(chain, iv.lo) - sign_changes(chain, iv.hi);
    if (cnt == 0) continue;
    if (cnt == 1) {
      isolated.push_back(iv);
      continue;
    }
    Rational mid = (iv.lo + iv.hi) / 2;
    work.push_back({iv.lo, mid});
    work.push_back({mid, iv.hi});
  }
  std::sort(isolated.begin(), isolated.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  for (auto& iv : isolated) {
    while (iv.hi - iv.lo > eps) {
      Rational mid = (iv.lo + iv.hi) / 2;
      if (sign_changes(chain, iv.lo) - sign_changes(chain, mid) == 1) iv.hi = mid;
      else iv.lo = mid;
    }
  }

  std::vector<Polynomial> factors;  // monic integer factors of q
  std::vector<bool> used(isolated.size(), false);
  for (std::size_t i = 0; i < isolated.size(); ++i) {
    Integer z;
    mpz_fdiv_q(z.get_mpz_t(), isolated[i].lo.get_num().get_mpz_t(), isolated[i].lo.get_den().get_mpz_t());
    for (z += 1; Rational(z) <= isolated[i].hi; z += 1)
      if (q(Rational(z)) == 0) {
        factors.push_back(Polynomial({Rational(Integer(-z)), Rational(1)}));
        used[i] = true;
      }
  }
  auto integers_in = [](const Rational& lo, const Rational& hi) {
    std::vector<Integer> zs;
    Integer z;
    mpz_cdiv_q(z.get_mpz_t(), lo.get_num().get_mpz_t(), lo.get_den().get_mpz_t());
    for (; Rational(z) <= hi; z += 1) zs.push_back(z);
    return zs;
  };
  std::set<std::pair<Integer, Integer>> seen;
  for (std::size_t i = 0; i < isolated.size(); ++i) {
    if (used[i]) continue;
    for (std::size_t j = i + 1; j < isolated.size() && !used[i]; ++j) {
      if (used[j]) continue;
      const auto &a = isolated[i], &b = isolated[j];
      Rational corners[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
      Rational plo = corners[0], phi = corners[0];
      for (const auto& x : corners) {
        plo = std::min(plo, x);
        phi = std::max(phi, x);
      }
      for (const auto& s : integers_in(a.lo + b.lo, a.hi + b.hi))
        for (const auto& t : integers_in(plo, phi)) {
          Polynomial f({Rational(t), Rational(-s), Rational(1)});
          if (seen.count({s, t}) || !divmod(q, f).remainder.is_zero()) continue;
          seen.insert({s, t});
          factors.push_back(f);
          used[i] = used[j] = true;
        }
    }
  }

  Polynomial rest = q;
  for (const auto& f : factors) rest = divmod(rest, f).quotient;

  const Rational cr(c);
  for (const auto& f : factors) {
    if (f.degree() == 1) {
      Rational r = -f.coeff(0) / cr;
      out.roots.push_back({QuadraticNumber(r), Polynomial({-r, Rational(1)}), 0});
      continue;
    }
    // x^2 - S x + T with S = s/c, T = t/c^2
    Rational S = -f.coeff(1) / cr;
    Rational T = f.coeff(0) / (cr * cr);
    Polynomial minpoly({T, -S, Rational(1)});
    Rational disc = S * S - 4 * T;
    Integer nd = disc.get_num() * disc.get_den();
    Integer rad = squarefree_part(nd);
    Integer sq = nd / rad, root;
    mpz_sqrt(root.get_mpz_t(), sq.get_mpz_t());
    Rational half = S / 2;
    Rational coef = make_rational(root, 2 * disc.get_den());
    out.roots.push_back({QuadraticNumber(half, coef, rad), minpoly, 0});
    out.roots.push_back({QuadraticNumber(half, -coef, rad), minpoly, 1});
  }
  if (rest.degree() > 0) {
    // Back to the original variable: rest(c x) / c^deg.
    std::vector<Rational> rc(rest.coeffs().size());
    for (std::size_t i = 0; i < rc.size(); ++i) rc[i] = rest.coeff(i) * Rational(ipow(c, i));
    out.not_enumerated.push_back(Polynomial(rc).monic());
  }
  return out;
}

}  // namespace hecke
