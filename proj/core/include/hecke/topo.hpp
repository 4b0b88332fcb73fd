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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hecke/derived.hpp"
#include "hecke/matrix.hpp"
#include "hecke/quadratic.hpp"

namespace hecke {

/// How the attaching data enters the off-diagonal block.
enum class Presentation {
  Canonical,       // coefficient p^{j-1-nu}
  UnitConjugated,  // coefficient -p^{j-1}/n
};

/// Elliptic homology of the cofiber of p^j v_1^n alpha_1 in weight k:
/// M_k (bottom cell) + M_{k-(p-1)n} (top cell), coordinates bottom first.
class TwoCellModule {
 public:
  TwoCellModule(long p, long n, long j, long k, Presentation presentation = Presentation::Canonical);

  long p() const { return p_; }
  long n() const { return n_; }
  long j() const { return j_; }
  long weight() const { return k_; }
  long nu() const { return ctx_.nu(); }
  long top_weight() const { return k_ - (p_ - 1) * n_; }
  std::size_t bottom_dim() const { return bottom_; }
  std::size_t top_dim() const { return top_; }
  std::size_t dim() const { return bottom_ + top_; }
  Presentation presentation() const { return presentation_; }
  /// j > nu_p(n): the attaching map vanishes and the action splits.
  bool split() const { return j_ > ctx_.nu(); }
  const CommutatorContext& context() const { return ctx_; }

  /// Off-diagonal block M_{k'} -> M_k of the action of T_l.
  QMatrix off_diagonal(long l) const;
  /// Block upper-triangular matrix of the topological T_l, l prime != p.
  QMatrix action(long l) const;
  /// Classical T_p on both summands; the attaching map dies once p is inverted.
  QMatrix action_at_p() const;
  /// The p-local unit -n p^{-nu} relating the two presentations.
  Rational presentation_unit() const;

 private:
  long p_, n_, j_, k_;
  Presentation presentation_;
  CommutatorContext ctx_;
  std::size_t bottom_, top_;
};

/// Elliptic homology of a wedge of even spheres in weight k:
/// the sum over cells of M_{k - d_i/2}.
class WedgeModule {
 public:
  WedgeModule(std::vector<long> cell_dims, long k);

  long weight() const { return k_; }
  const std::vector<long>& cell_dims() const { return cells_; }
  long cell_weight(std::size_t i) const { return k_ - cells_[i] / 2; }
  std::size_t cell_offset(std::size_t i) const { return offsets_[i]; }
  std::size_t cell_size(std::size_t i) const { return offsets_[i + 1] - offsets_[i]; }
  std::size_t dim() const { return offsets_.back(); }

  QMatrix action(long l) const;

 private:
  std::vector<long> cells_;
  long k_;
  std::vector<std::size_t> offsets_;
};

enum class Support { BottomOnly, TopNontrivial, Cells };

struct TopoEigenform {
  Support support = Support::BottomOnly;
  std::vector<std::size_t> cells;  // nonzero summands, lowest cell first
  std::map<long, QuadraticNumber> character;
  Integer radicand = 0;
  std::vector<QuadraticNumber> vector;
  /// Weight of the highest cell on which the vector is nonzero.
  long top_cell_weight = 0;
  /// Rank of the joint eigenspace this vector came from.
  std::size_t eigenspace_rank = 1;
};

std::string to_string(Support s);

/// Every simultaneous eigenvector of the topological T_l, l in primes, as a
/// basis of each joint eigenspace. Vectors are scaled so the first nonzero
/// coordinate of the highest nonzero cell is 1 and then made primitive over Z_(p).
std::vector<TopoEigenform> joint_eigenforms(const TwoCellModule& m, const std::vector<long>& primes);
/// Wedge variant; primitivity is taken at `p` (any prime >= 5 not in primes).
std::vector<TopoEigenform> joint_eigenforms(const WedgeModule& m, const std::vector<long>& primes, long p);

/// The expected list: bottom-supported classical eigenforms (f, 0) and, for
/// each classical g of weight k', (-E^n g, p^{1+nu-j} g) if j <= nu, or (0, g)
/// in the split case. Built from classical data only.
std::vector<TopoEigenform> classify_two_cell(long p, long n, long j, long k, const std::vector<long>& primes);

/// Orders eigenforms by support, then character.
void sort_eigenforms(std::vector<TopoEigenform>& forms);
/// Equal as normalized vectors with equal characters, in the same order.
bool same_eigenforms(const std::vector<TopoEigenform>& a, const std::vector<TopoEigenform>& b);

struct MultiplicityEntry {
  std::map<long, QuadraticNumber> character;
  std::size_t rank = 0;
};
struct MultiplicityReport {
  std::vector<MultiplicityEntry> entries;
  std::size_t max_rank() const;
};

/// Eigenspace ranks. For two-cell modules a rank above 1 throws AssertionFailure.
MultiplicityReport multiplicity_one_check(const TwoCellModule& m, const std::vector<long>& primes);
MultiplicityReport multiplicity_one_check(const WedgeModule& m, const std::vector<long>& primes);

/// On rank-one eigenvectors, Psi^l acts by l^w with w the weight of the
/// highest nonzero cell; checks T_{l^2} = T_l T_l - l^{-1} Psi^l reproduces
/// the classical T_{l^2} eigenvalue of that cell's component.
bool composite_hecke_check(const TwoCellModule& m, const std::vector<TopoEigenform>& forms,
                           const std::vector<long>& primes);

struct ExtensionResult {
  bool extends = false;
  long order_exponent = 0;          // obstructed: class has order p^order_exponent
  std::vector<QuadraticNumber> f0;  // extends: bottom component
};

/// Does the eigenform g of weight k' extend to an eigenform (f0, g) over the
/// two-cell complex? Tests whether g dot-cup p^j kappa_n is a coboundary in the
/// twisted bimodule; when it is, f0 = -h for the witness h and (f0, g) is
/// verified to be a joint eigenvector.
ExtensionResult extension_obstruction(long p, long n, long j, long g_weight, const std::vector<QuadraticNumber>& g,
                                      const std::map<long, QuadraticNumber>& character,
                                      const std::vector<long>& primes);

}  // namespace hecke
