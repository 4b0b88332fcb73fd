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

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "hecke/matrix.hpp"
#include "hecke/modforms.hpp"
#include "hecke/qseries.hpp"
#include "hecke/quadratic.hpp"

namespace hecke {

/// An operator on M_* of fixed weight shift, given weight by weight and
/// memoized. Copies share the memo table; not safe for concurrent use.
class GradedOperator {
 public:
  GradedOperator(long degree, std::function<QMatrix(long)> at_weight);
  /// The Hecke operator T_n on every weight.
  static GradedOperator hecke(long n);

  long degree() const { return degree_; }
  /// Matrix from M_k to M_{k + degree}.
  const QMatrix& at(long k) const;

  /// (this after other): first apply other, then this.
  GradedOperator compose(const GradedOperator& other) const;

 private:
  long degree_;
  std::shared_ptr<std::function<QMatrix(long)>> fn_;
  std::shared_ptr<std::map<long, QMatrix>> memo_;
};

/// The prime p >= 5, the multiplier mu = p, E = E_{p-1} and the integer n.
class CommutatorContext {
 public:
  /// Checks p prime >= 5, n >= 1 and E = 1 mod p coefficientwise.
  CommutatorContext(long p, long n);

  long p() const { return p_; }
  long n() const { return n_; }
  long nu() const { return nu_; }
  const Rational& mu() const { return mu_; }
  long e_weight() const { return p_ - 1; }
  /// Weight shift of D_n: (p - 1) n.
  long shift() const { return (p_ - 1) * n_; }

  /// Multiplication by E as a degree (p - 1) operator.
  const GradedOperator& e() const { return e_; }
  /// e^m: M_k -> M_{k + (p-1) m} as a chain of single multiplications.
  QMatrix e_power(long k, long m) const;
  /// Multiplication by the series E^m, computed independently of e_power.
  QMatrix e_power_direct(long k, long m) const;

 private:
  long p_, n_, nu_;
  Rational mu_;
  GradedOperator e_;
};

/// mu * delta(S) = S e - e S, of degree deg S + (p - 1).
GradedOperator mu_delta(const GradedOperator& s, const CommutatorContext& ctx);

/// f -> (T(E f) - E T(f)) / mu on M_k. Throws AssertionFailure if the result
/// is not p-integral.
QMatrix apply_delta(const GradedOperator& t, const CommutatorContext& ctx, long k);

/// D_n(T) on M_k from its definition: sum_{i=1}^n C(n, i) e^{n-i} (mu delta)^i T / mu.
QMatrix apply_Dn_binomial(const GradedOperator& t, const CommutatorContext& ctx, long k);
/// (T e^n - e^n T) / mu on M_k, with e^n taken from the series E^n.
QMatrix apply_Dn_closed(const GradedOperator& t, const CommutatorContext& ctx, long k);

/// D_n(T) on M_k. Computes both of the above and throws AssertionFailure if
/// they differ.
QMatrix apply_Dn(const GradedOperator& t, const CommutatorContext& ctx, long k);

/// D_n(T) / p^{nu_p(n)}, checked p-integral.
QMatrix apply_Delta_n(const GradedOperator& t, const CommutatorContext& ctx, long k);

enum class BimoduleKind { HomMM, Twisted };

struct BimoduleSpec {
  BimoduleKind kind = BimoduleKind::HomMM;
  /// Eigenvalue at each generator; used for the twisted kind only.
  std::map<long, QuadraticNumber> character;
};

/// A degree-1 Hochschild cochain: one operator per generator T_l, l in L.
/// For HomMM each value is a dim M_{k+s} x dim M_k matrix; for Twisted it is
/// a column vector in M_{k+s}.
struct HochschildCochain1 {
  long weight_in = 0;
  long shift = 0;
  BimoduleSpec bimodule;
  std::map<long, Matrix<QuadraticNumber>> values;

  long weight_out() const { return weight_in + shift; }
  std::vector<long> primes() const;
  HochschildCochain1 scaled(const QuadraticNumber& s) const;
  friend bool operator==(const HochschildCochain1& a, const HochschildCochain1& b) {
    return a.weight_in == b.weight_in && a.shift == b.shift && a.bimodule.kind == b.bimodule.kind &&
           a.values == b.values;
  }
};

/// Exact check of the cocycle identity for the cochain's bimodule kind.
bool satisfies_cocycle_condition(const HochschildCochain1& c);

/// The cochain l -> Delta_n(T_l) on M_k.
HochschildCochain1 kappa_cocycle(const CommutatorContext& ctx, long k, const std::vector<long>& primes);

/// l -> T_l F - F T_l for a map F: M_k -> M_{k+s}.
HochschildCochain1 hom_coboundary(const Matrix<QuadraticNumber>& f, long k, long s, const std::vector<long>& primes);

/// Finds a p-integral F with T_l F - F T_l = c(l) (HomMM), or h with
/// T_l h - lambda(l) h = c(l) (Twisted), for every l. nullopt if none exists.
std::optional<Matrix<QuadraticNumber>> is_coboundary(const HochschildCochain1& c, long p);

/// Smallest m <= max_exponent with p^m c a coboundary.
std::optional<long> cochain_order_exponent(const HochschildCochain1& c, long p, long max_exponent);

struct ClassOrder {
  long exponent = 0;  // order is p^exponent
  Integer order;
  std::vector<long> primes;
};

/// Order of the class of kappa_cocycle at (k, L). Searches m up to
/// 1 + nu + 2; at m = 1 + nu the coboundary witness must be e^n exactly.
ClassOrder class_order(const CommutatorContext& ctx, long k, const std::vector<long>& primes);

/// f (an eigenform of weight c.weight_in with the given character) dot-cup c:
/// the twisted cochain l -> c(l) f.
HochschildCochain1 dotcup(const std::vector<QuadraticNumber>& f, const std::map<long, QuadraticNumber>& character,
                          const HochschildCochain1& c);

}  // namespace hecke
