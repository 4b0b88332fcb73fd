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

#include <optional>
#include <vector>

#include "hecke/matrix.hpp"
#include "hecke/quadratic.hpp"

namespace hecke {

/// U * A * V = D with U, V unimodular and D diagonal, d_i | d_{i+1}, d_i > 0
/// for i < rank and zero afterwards.
struct SmithForm {
  ZMatrix U;
  ZMatrix V;
  std::vector<Integer> diagonal;  // length min(rows, cols)
  std::size_t rank = 0;
};

SmithForm smith_normal_form(const ZMatrix& a);

/// Nonzero elementary divisors of an integer matrix.
std::vector<Integer> elementary_divisors(const ZMatrix& a);

/// Decides whether A x = b has a solution with every x_i in Z_(p), and
/// returns one if so (free coordinates set to zero). Entries may be any
/// rationals; rows are rescaled to integers first.
std::optional<std::vector<Rational>> smith_solve_local(const QMatrix& a, const std::vector<Rational>& b, long p);

/// The same question over Z_(p)[sqrt d] when the system has entries in a
/// quadratic field: splits every unknown into rational and sqrt(d) parts.
std::optional<std::vector<QuadraticNumber>> smith_solve_local(const Matrix<QuadraticNumber>& a,
                                                              const std::vector<QuadraticNumber>& b, long p);

/// The common radicand of the nonrational entries, or 0 if all are rational.
Integer common_radicand(const Matrix<QuadraticNumber>& a);

}  // namespace hecke
