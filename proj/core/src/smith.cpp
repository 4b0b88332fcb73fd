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


#include "hecke/smith.hpp"

#include <stdexcept>

namespace hecke {
namespace {

void swap_rows(ZMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(ZMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

// row_dst -= q * row_src
void sub_row(ZMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (m(src, j) != 0) m(dst, j) -= q * m(src, j);
}

void sub_col(ZMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (m(i, src) != 0) m(i, dst) -= q * m(i, src);
}

}  // namespace

SmithForm smith_normal_form(const ZMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  ZMatrix d = a;
  SmithForm out{ZMatrix::identity(m), ZMatrix::identity(n), {}, 0};
  std::size_t t = 0;
  for (; t < std::min(m, n); ++t) {
    // Smallest nonzero entry of the remaining block becomes the pivot.
    bool found = false;
    std::size_t pi = t, pj = t;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (d(i, j) != 0 && (!found || abs(d(i, j)) < abs(d(pi, pj)))) {
          found = true;
          pi = i;
          pj = j;
        }
    if (!found) break;
    swap_rows(d, t, pi);
    swap_rows(out.U, t, pi);
    swap_cols(d, t, pj);
    swap_cols(out.V, t, pj);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (d(i, t) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), d(i, t).get_mpz_t(), d(t, t).get_mpz_t());
        sub_row(d, i, t, q);
        sub_row(out.U, i, t, q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d(t, j) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), d(t, j).get_mpz_t(), d(t, t).get_mpz_t());
        sub_col(d, j, t, q);
        sub_col(out.V, j, t, q);
        if (d(t, j) != 0) clean = false;
      }
      if (clean) {
        // Pivot must divide the rest of the block.
        std::size_t bad = m;
        for (std::size_t i = t + 1; i < m && bad == m; ++i)
          for (std::size_t j = t + 1; j < n; ++j)
            if (mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t()) == 0) {
              bad = i;
              break;
            }
        if (bad == m) break;
        sub_row(d, t, bad, Integer(-1));
        sub_row(out.U, t, bad, Integer(-1));
        continue;
      }
      // A remainder is now smaller than the pivot: move it into place.
      std::size_t bi = t, bj = t;
      for (std::size_t i = t + 1; i < m; ++i)
        if (d(i, t) != 0 && abs(d(i, t)) < abs(d(bi, bj))) {
          bi = i;
          bj = t;
        }
      for (std::size_t j = t + 1; j < n; ++j)
        if (d(t, j) != 0 && abs(d(t, j)) < abs(d(bi, bj))) {
          bi = t;
          bj = j;
        }
      swap_rows(d, t, bi);
      swap_rows(out.U, t, bi);
      swap_cols(d, t, bj);
      swap_cols(out.V, t, bj);
    }
    if (d(t, t) < 0) {
      for (std::size_t j = 0; j < n; ++j) d(t, j) = -d(t, j);
      for (std::size_t j = 0; j < m; ++j) out.U(t, j) = -out.U(t, j);
    }
  }
  out.rank = t;
  out.diagonal.resize(std::min(m, n));
  for (std::size_t i = 0; i < out.diagonal.size(); ++i) out.diagonal[i] = d(i, i);
  return out;
}

std::vector<Integer> elementary_divisors(const ZMatrix& a) {
  auto s = smith_normal_form(a);
  return std::vector<Integer>(s.diagonal.begin(), s.diagonal.begin() + static_cast<std::ptrdiff_t>(s.rank));
}

std::optional<std::vector<Rational>> smith_solve_local(const QMatrix& a, const std::vector<Rational>& b, long p) {
  if (a.rows() != b.size()) throw std::invalid_argument("smith_solve_local: shape mismatch");
  // Scaling a row of [A | b] never changes the solution set.
  ZMatrix za(a.rows(), a.cols());
  std::vector<Integer> zb(b.size());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Integer l = b[i].get_den();
    for (std::size_t j = 0; j < a.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).get_den().get_mpz_t());
    const Rational scale(l);
    for (std::size_t j = 0; j < a.cols(); ++j) za(i, j) = Rational(a(i, j) * scale).get_num();
    zb[i] = Rational(b[i] * scale).get_num();
  }
  auto s = smith_normal_form(za);
  std::vector<Integer> ub = s.U * zb;
  std::vector<Rational> y(a.cols(), Rational(0));
  for (std::size_t i = 0; i < ub.size(); ++i) {
    if (i >= s.rank) {
      if (ub[i] != 0) return std::nullopt;
      continue;
    }
    if (p_valuation(s.diagonal[i], p) > p_valuation(ub[i], p)) return std::nullopt;
    y[i] = make_rational(ub[i], s.diagonal[i]);
  }
  return to_rational(s.V) * y;
}

Integer common_radicand(const Matrix<QuadraticNumber>& a) {
  Integer d = 0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const auto& r = a(i, j).radicand();
      if (r == 0) continue;
      if (d != 0 && d != r) throw std::domain_error("system mixes quadratic fields");
      d = r;
    }
  return d;
}

std::optional<std::vector<QuadraticNumber>> smith_solve_local(const Matrix<QuadraticNumber>& a,
                                                              const std::vector<QuadraticNumber>& b, long p) {
  Matrix<QuadraticNumber> ab = hstack(a, Matrix<QuadraticNumber>::column(b));
  Integer d = common_radicand(ab);
  const std::size_t m = a.rows(), n = a.cols();
  if (d == 0) {
    QMatrix qa = a.map([](const QuadraticNumber& x) { return x.rational_part(); });
    std::vector<Rational> qb(m);
    for (std::size_t i = 0; i < m; ++i) qb[i] = b[i].rational_part();
    auto x = smith_solve_local(qa, qb, p);
    if (!x) return std::nullopt;
    return std::vector<QuadraticNumber>(x->begin(), x->end());
  }
  // (A0 + A1 s)(x0 + x1 s) = (A0 x0 + d A1 x1) + (A1 x0 + A0 x1) s with s = sqrt(d).
  QMatrix big(2 * m, 2 * n);
  std::vector<Rational> rhs(2 * m);
  const Rational dd(d);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& a0 = a(i, j).rational_part();
      const Rational& a1 = a(i, j).irrational_part();
      big(i, j) = a0;
      big(i, n + j) = dd * a1;
      big(m + i, j) = a1;
      big(m + i, n + j) = a0;
    }
    rhs[i] = b[i].rational_part();
    rhs[m + i] = b[i].irrational_part();
  }
  auto x = smith_solve_local(big, rhs, p);
  if (!x) return std::nullopt;
  std::vector<QuadraticNumber> out(n);
  for (std::size_t j = 0; j < n; ++j)
    out[j] = (*x)[n + j] == 0 ? QuadraticNumber((*x)[j]) : QuadraticNumber((*x)[j], (*x)[n + j], d);
  return out;
}

}  // namespace hecke
