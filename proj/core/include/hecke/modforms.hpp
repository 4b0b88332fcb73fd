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

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hecke/arith.hpp"
#include "hecke/matrix.hpp"
#include "hecke/polynomial.hpp"
#include "hecke/qseries.hpp"
#include "hecke/quadratic.hpp"

namespace hecke {

long dim_Mk(long k);

/// Echelon basis g_0..g_{d-1} of M_k with a_i(g_j) = delta_ij for i, j < d,
/// built from monomials Delta^j E_6^b E_4^a. Throws if prec < dim M_k.
std::vector<QSeries> miller_basis(long k, std::size_t prec);
/// Integral version of the same basis; shares the process-wide cache.
std::vector<IntSeries> miller_basis_integral(long k, std::size_t prec);

/// A weight-k form as coordinates in the echelon basis. Coordinate i equals
/// the q^i coefficient for i < dim M_k.
struct ModularForm {
  long weight = 0;
  std::vector<Rational> coords;

  QSeries expansion(std::size_t prec) const;
  /// Throws std::invalid_argument unless f agrees with an element of M_k to its precision.
  static ModularForm from_series(long k, const QSeries& f);
};

/// q-expansion of sum_j c_j g_j over a quadratic field.
std::vector<QuadraticNumber> expansion(long k, const std::vector<QuadraticNumber>& coords, std::size_t prec);

/// Matrix of T_n on the echelon basis of M_k, from
/// a_m(T_n f) = sum_{e | gcd(m, n)} e^{k-1} a_{mn/e^2}(f).
QMatrix hecke_matrix(long k, long n);

struct HeckeMatrix {
  long weight = 0;
  long index = 1;
  QMatrix entries;
};
/// The same, with p-integrality of every entry checked for primes p not dividing n.
HeckeMatrix hecke_matrix(long k, long n, const PLocalContext& ctx);

/// Matrix of f * (-) from M_k to M_{k+w}, where f is a weight-w form known to
/// at least dim M_{k+w} coefficients.
QMatrix multiplication_matrix(const QSeries& f, long w, long k);

/// Where Hecke matrices are persisted; nullopt disables the disk cache.
/// Defaults to $HECKE_TOPO_CACHE, else ./.cache.
void set_cache_directory(std::optional<std::filesystem::path> dir);
std::optional<std::filesystem::path> cache_directory();
/// Drops the in-memory matrix and series caches (the disk cache stays).
void clear_memory_caches();

enum class FormKind { Eisenstein, Cuspidal };

/// One eigencharacter per embedding of its eigenvalue field. Conjugate
/// characters share char_poly and differ in choice.
struct Eigencharacter {
  long weight = 0;
  FormKind kind = FormKind::Cuspidal;
  std::map<long, QuadraticNumber> eigenvalues;
  Polynomial char_poly;  // minimal polynomial of the eigenvalue at the first prime
  int choice = 0;
  Integer radicand = 0;
  /// Normalized eigenform: a_0 = 1 (Eisenstein or weight 0) or a_1 = 1.
  std::vector<QuadraticNumber> eigenform;
};

struct EigenSystem {
  std::vector<Eigencharacter> characters;
  /// Cusp factors of degree > 2 (or otherwise not split), left symbolic.
  std::vector<Polynomial> not_enumerated;
};

/// Classical eigencharacters of M_k for the primes in `primes` (ascending).
EigenSystem eigencharacters(long k, const std::vector<long>& primes);

/// Scales a vector so its first nonzero coordinate is 1.
std::vector<QuadraticNumber> normalize_first_nonzero(std::vector<QuadraticNumber> v);

}  // namespace hecke
