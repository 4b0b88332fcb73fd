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


#include "hecke/topo.hpp"

#include <algorithm>
#include <stdexcept>

#include "hecke/eigenspace.hpp"

namespace hecke {

namespace {

struct CellRange {
  std::size_t offset, size;
  long weight;
};

void require_generator(long l, long p) {
  if (!is_prime(l)) throw std::invalid_argument("Hecke generator " + std::to_string(l) + " is not prime");
  if (l == p) throw std::invalid_argument("T_p does not act through the attaching map; use action_at_p");
}

bool is_zero_range(const std::vector<QuadraticNumber>& v, const CellRange& c) {
  for (std::size_t i = c.offset; i < c.offset + c.size; ++i)
    if (!(v[i] == QuadraticNumber(0))) return false;
  return true;
}

// Highest nonzero cell's first nonzero coordinate becomes 1, then the vector
// is made primitive over Z_(p).
std::vector<QuadraticNumber> normal_form(std::vector<QuadraticNumber> v, const std::vector<CellRange>& cells,
                                         std::size_t top, long p) {
  const CellRange& c = cells[top];
  for (std::size_t i = c.offset; i < c.offset + c.size; ++i)
    if (!(v[i] == QuadraticNumber(0))) {
      const QuadraticNumber inv = QuadraticNumber(1) / v[i];
      for (auto& x : v) x *= inv;
      break;
    }
  Valuation low = Valuation::infinity();
  for (const auto& x : v) low = std::min(low, x.valuation(p));
  if (!low.is_infinite() && low.value() != 0) {
    const QuadraticNumber s(rpow(Rational(p), -low.value()));
    for (auto& x : v) x *= s;
  }
  return v;
}

TopoEigenform make_form(const std::vector<QuadraticNumber>& raw, const std::vector<CellRange>& cells,
                        const JointEigenspace& space, long p, bool two_cell) {
  TopoEigenform f;
  std::size_t top = 0;
  for (std::size_t c = 0; c < cells.size(); ++c)
    if (!is_zero_range(raw, cells[c])) {
      f.cells.push_back(c);
      top = c;
    }
  f.vector = normal_form(raw, cells, top, p);
  f.character = space.eigenvalues;
  f.radicand = space.radicand;
  f.top_cell_weight = cells[top].weight;
  f.eigenspace_rank = space.rank();
  if (two_cell) f.support = (top == 1) ? Support::TopNontrivial : Support::BottomOnly;
  else f.support = Support::Cells;
  return f;
}

std::vector<CellRange> two_cell_ranges(const TwoCellModule& m) {
  return {{0, m.bottom_dim(), m.weight()}, {m.bottom_dim(), m.top_dim(), m.top_weight()}};
}

std::vector<CellRange> wedge_ranges(const WedgeModule& m) {
  std::vector<CellRange> r;
  for (std::size_t i = 0; i < m.cell_dims().size(); ++i) r.push_back({m.cell_offset(i), m.cell_size(i), m.cell_weight(i)});
  return r;
}

// Wedge cells are ordered so that the highest one is last.
std::vector<std::size_t> wedge_order(const WedgeModule& m) {
  std::vector<std::size_t> idx(m.cell_dims().size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return m.cell_dims()[a] < m.cell_dims()[b]; });
  return idx;
}

int compare_values(const QuadraticNumber& a, const QuadraticNumber& b) {
  if (a.rational_part() != b.rational_part()) return a.rational_part() < b.rational_part() ? -1 : 1;
  if (a.irrational_part() != b.irrational_part()) return a.irrational_part() < b.irrational_part() ? -1 : 1;
  return 0;
}

int compare_vectors(const std::vector<QuadraticNumber>& a, const std::vector<QuadraticNumber>& b) {
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i)
    if (int c = compare_values(a[i], b[i])) return c;
  return a.size() < b.size() ? -1 : (a.size() > b.size() ? 1 : 0);
}

}  // namespace

std::string to_string(Support s) {
  switch (s) {
    case Support::BottomOnly: return "bottom-only";
    case Support::TopNontrivial: return "top-nontrivial";
    case Support::Cells: return "cells";
  }
  return "unknown";
}

TwoCellModule::TwoCellModule(long p, long n, long j, long k, Presentation presentation)
    : p_(p), n_(n), j_(j), k_(k), presentation_(presentation), ctx_(p, n) {
  if (j < 0) throw std::invalid_argument("j must be nonnegative");
  if (k < 0 || k % 2) throw std::invalid_argument("weight must be even and nonnegative");
  bottom_ = static_cast<std::size_t>(dim_Mk(k));
  top_ = static_cast<std::size_t>(dim_Mk(top_weight()));
}

Rational TwoCellModule::presentation_unit() const {
  return Rational(-n_) / Rational(ipow(Integer(p_), static_cast<unsigned long>(nu())));
}

QMatrix TwoCellModule::off_diagonal(long l) const {
  require_generator(l, p_);
  if (split() || bottom_ == 0 || top_ == 0) return QMatrix(bottom_, top_);
  // p^{j-1-nu} (T e^n - e^n T) = p^j Delta_n(T)
  QMatrix b = apply_Delta_n(GradedOperator::hecke(l), ctx_, top_weight());
  b *= Rational(ipow(Integer(p_), static_cast<unsigned long>(j_)));
  if (presentation_ == Presentation::UnitConjugated) b *= Rational(1 / presentation_unit());
  return b;
}

QMatrix TwoCellModule::action(long l) const {
  require_generator(l, p_);
  QMatrix a(dim(), dim());
  a.set_block(0, 0, hecke_matrix(k_, l));
  if (top_) {
    a.set_block(0, bottom_, off_diagonal(l));
    a.set_block(bottom_, bottom_, hecke_matrix(top_weight(), l));
  }
  return a;
}

QMatrix TwoCellModule::action_at_p() const {
  QMatrix a(dim(), dim());
  a.set_block(0, 0, hecke_matrix(k_, p_));
  if (top_) a.set_block(bottom_, bottom_, hecke_matrix(top_weight(), p_));
  return a;
}

WedgeModule::WedgeModule(std::vector<long> cell_dims, long k) : cells_(std::move(cell_dims)), k_(k) {
  if (cells_.empty()) throw std::invalid_argument("wedge needs at least one cell");
  offsets_.push_back(0);
  for (long d : cells_) {
    if (d < 0 || d % 2) throw std::invalid_argument("cell dimensions must be even and nonnegative");
    offsets_.push_back(offsets_.back() + static_cast<std::size_t>(dim_Mk(k_ - d / 2)));
  }
}

QMatrix WedgeModule::action(long l) const {
  if (!is_prime(l)) throw std::invalid_argument("Hecke generator must be prime");
  QMatrix a(dim(), dim());
  for (std::size_t i = 0; i < cells_.size(); ++i)
    if (cell_size(i)) a.set_block(cell_offset(i), cell_offset(i), hecke_matrix(cell_weight(i), l));
  return a;
}

std::vector<TopoEigenform> joint_eigenforms(const TwoCellModule& m, const std::vector<long>& primes) {
  std::vector<TopoEigenform> out;
  if (m.dim() == 0) return out;
  std::vector<std::pair<long, QMatrix>> ops;
  for (long l : primes) ops.emplace_back(l, m.action(l));
  const auto ranges = two_cell_ranges(m);
  for (const auto& space : joint_eigenspaces(ops).spaces)
    for (std::size_t c = 0; c < space.rank(); ++c) out.push_back(make_form(space.basis.col(c), ranges, space, m.p(), true));
  sort_eigenforms(out);
  return out;
}

std::vector<TopoEigenform> joint_eigenforms(const WedgeModule& m, const std::vector<long>& primes, long p) {
  std::vector<TopoEigenform> out;
  if (m.dim() == 0) return out;
  std::vector<std::pair<long, QMatrix>> ops;
  for (long l : primes) ops.emplace_back(l, m.action(l));
  // Reorder cell ranges so the highest cell is last.
  std::vector<CellRange> ranges;
  const auto all = wedge_ranges(m);
  const auto order = wedge_order(m);
  for (std::size_t i : order) ranges.push_back(all[i]);
  for (const auto& space : joint_eigenspaces(ops).spaces)
    for (std::size_t c = 0; c < space.rank(); ++c) {
      TopoEigenform f = make_form(space.basis.col(c), ranges, space, p, false);
      for (auto& cell : f.cells) cell = order[cell];
      std::sort(f.cells.begin(), f.cells.end());
      out.push_back(std::move(f));
    }
  sort_eigenforms(out);
  return out;
}

std::vector<TopoEigenform> classify_two_cell(long p, long n, long j, long k, const std::vector<long>& primes) {
  TwoCellModule m(p, n, j, k);
  for (long l : primes) require_generator(l, p);
  const auto ranges = two_cell_ranges(m);
  std::vector<TopoEigenform> out;
  auto finish = [&](std::vector<QuadraticNumber> v, const Eigencharacter& c, std::size_t top) {
    TopoEigenform f;
    for (std::size_t cell = 0; cell < ranges.size(); ++cell)
      if (!is_zero_range(v, ranges[cell])) f.cells.push_back(cell);
    f.support = top == 1 ? Support::TopNontrivial : Support::BottomOnly;
    f.character = c.eigenvalues;
    f.radicand = c.radicand;
    f.top_cell_weight = ranges[top].weight;
    check(normal_form(v, ranges, top, p) == v, "classified eigenform is not in normal form");
    f.vector = std::move(v);
    out.push_back(std::move(f));
  };

  auto primitive = [p](std::vector<QuadraticNumber> g) {
    g = normalize_first_nonzero(std::move(g));
    Valuation low = Valuation::infinity();
    for (const auto& x : g) low = std::min(low, x.valuation(p));
    if (!low.is_infinite() && low.value() != 0) {
      const QuadraticNumber s(rpow(Rational(p), -low.value()));
      for (auto& x : g) x *= s;
    }
    return g;
  };

  for (const auto& c : eigencharacters(k, primes).characters) {
    std::vector<QuadraticNumber> v(m.dim(), QuadraticNumber(0));
    auto f = primitive(c.eigenform);
    std::copy(f.begin(), f.end(), v.begin());
    finish(std::move(v), c, 0);
  }
  if (m.top_dim() > 0) {
    const Matrix<QuadraticNumber> en = lift(m.context().e_power_direct(m.top_weight(), n));
    for (const auto& c : eigencharacters(m.top_weight(), primes).characters) {
      std::vector<QuadraticNumber> v(m.dim(), QuadraticNumber(0));
      const auto g = primitive(c.eigenform);
      if (!m.split()) {
        // (-p^{j-1-nu} E^n g, g) with g = p^{1+nu-j} g_prim
        const auto bottom = en * g;
        for (std::size_t i = 0; i < m.bottom_dim(); ++i) v[i] = -bottom[i];
        const QuadraticNumber s(rpow(Rational(p), 1 + m.nu() - j));
        for (std::size_t i = 0; i < m.top_dim(); ++i) v[m.bottom_dim() + i] = s * g[i];
      } else {
        for (std::size_t i = 0; i < m.top_dim(); ++i) v[m.bottom_dim() + i] = g[i];
      }
      finish(std::move(v), c, 1);
    }
  }
  sort_eigenforms(out);
  return out;
}

void sort_eigenforms(std::vector<TopoEigenform>& forms) {
  std::stable_sort(forms.begin(), forms.end(), [](const TopoEigenform& a, const TopoEigenform& b) {
    if (a.support != b.support) return a.support < b.support;
    if (a.cells != b.cells) return a.cells < b.cells;
    auto ia = a.character.begin(), ib = b.character.begin();
    for (; ia != a.character.end() && ib != b.character.end(); ++ia, ++ib) {
      if (ia->first != ib->first) return ia->first < ib->first;
      if (int c = compare_values(ia->second, ib->second)) return c < 0;
    }
    if (a.character.size() != b.character.size()) return a.character.size() < b.character.size();
    return compare_vectors(a.vector, b.vector) < 0;
  });
}

bool same_eigenforms(const std::vector<TopoEigenform>& a, const std::vector<TopoEigenform>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].support != b[i].support || !(a[i].vector == b[i].vector) || !(a[i].character == b[i].character))
      return false;
  return true;
}

std::size_t MultiplicityReport::max_rank() const {
  std::size_t r = 0;
  for (const auto& e : entries) r = std::max(r, e.rank);
  return r;
}

MultiplicityReport multiplicity_one_check(const TwoCellModule& m, const std::vector<long>& primes) {
  MultiplicityReport rep;
  if (m.dim() == 0) return rep;
  std::vector<std::pair<long, QMatrix>> ops;
  for (long l : primes) ops.emplace_back(l, m.action(l));
  for (const auto& s : joint_eigenspaces(ops).spaces) rep.entries.push_back({s.eigenvalues, s.rank()});
  check(rep.max_rank() <= 1, "two-cell module has an eigenspace of rank > 1");
  return rep;
}

MultiplicityReport multiplicity_one_check(const WedgeModule& m, const std::vector<long>& primes) {
  MultiplicityReport rep;
  if (m.dim() == 0) return rep;
  std::vector<std::pair<long, QMatrix>> ops;
  for (long l : primes) ops.emplace_back(l, m.action(l));
  for (const auto& s : joint_eigenspaces(ops).spaces) rep.entries.push_back({s.eigenvalues, s.rank()});
  return rep;
}

bool composite_hecke_check(const TwoCellModule& m, const std::vector<TopoEigenform>& forms,
                           const std::vector<long>& primes) {
  for (const auto& f : forms) {
    if (f.eigenspace_rank != 1) continue;
    const bool top = f.support == Support::TopNontrivial;
    const long w = f.top_cell_weight;
    const std::size_t off = top ? m.bottom_dim() : 0, len = top ? m.top_dim() : m.bottom_dim();
    std::vector<QuadraticNumber> comp(f.vector.begin() + static_cast<std::ptrdiff_t>(off),
                                      f.vector.begin() + static_cast<std::ptrdiff_t>(off + len));
    for (long l : primes) {
      // Classical eigenvalue of T_{l^2} on the highest cell's component.
      const auto t2 = lift(hecke_matrix(w, l * l)) * comp;
      std::size_t lead = 0;
      while (lead < len && comp[lead] == QuadraticNumber(0)) ++lead;
      if (lead == len) return false;
      const QuadraticNumber mu = t2[lead] / comp[lead];
      for (std::size_t i = 0; i < len; ++i)
        if (!(t2[i] == mu * comp[i])) return false;
      const auto a = lift(m.action(l));
      const auto once = a * f.vector;
      const auto twice = a * once;
      const QuadraticNumber psi_over_l(rpow(Rational(l), w - 1));
      for (std::size_t i = 0; i < f.vector.size(); ++i)
        if (!(twice[i] - psi_over_l * f.vector[i] == mu * f.vector[i])) return false;
    }
  }
  return true;
}

ExtensionResult extension_obstruction(long p, long n, long j, long g_weight, const std::vector<QuadraticNumber>& g,
                                      const std::map<long, QuadraticNumber>& character,
                                      const std::vector<long>& primes) {
  CommutatorContext ctx(p, n);
  if (j < 0) throw std::invalid_argument("j must be nonnegative");
  for (long l : primes) require_generator(l, p);
  const long k = g_weight + ctx.shift();
  ExtensionResult r;
  if (j > ctx.nu()) {
    // The attaching class is zero: every g extends with f0 = 0.
    r.extends = true;
    r.f0.assign(static_cast<std::size_t>(dim_Mk(k)), QuadraticNumber(0));
    return r;
  }
  const QuadraticNumber pj(Rational(ipow(Integer(p), static_cast<unsigned long>(j))));
  HochschildCochain1 c = dotcup(g, character, kappa_cocycle(ctx, g_weight, primes).scaled(pj));
  if (auto h = is_coboundary(c, p)) {
    r.extends = true;
    for (std::size_t i = 0; i < h->rows(); ++i) r.f0.push_back(-(*h)(i, 0));
    TwoCellModule m(p, n, j, k);
    std::vector<QuadraticNumber> v = r.f0;
    v.insert(v.end(), g.begin(), g.end());
    for (long l : primes) {
      std::vector<QuadraticNumber> expected = v;
      for (auto& x : expected) x *= character.at(l);
      check(lift(m.action(l)) * v == expected, "extension witness (f0, g) is not a joint eigenvector");
    }
    return r;
  }
  auto order = cochain_order_exponent(c, p, 1 + ctx.nu() + 2);
  check(order.has_value(), "obstruction class order exceeds the searched range");
  r.order_exponent = *order;
  return r;
}

}  // namespace hecke
