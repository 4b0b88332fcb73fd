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
#include <utility>
#include <vector>

#include "hecke/matrix.hpp"
#include "hecke/polynomial.hpp"
#include "hecke/quadratic.hpp"

namespace hecke {

/// A simultaneous eigenspace of a commuting family of rational matrices,
/// defined over Q or a single real quadratic field.
struct JointEigenspace {
  std::map<long, QuadraticNumber> eigenvalues;  // operator label -> eigenvalue
  std::map<long, Polynomial> minimal_polynomials;
  std::map<long, int> choices;                  // root branch per label
  Integer radicand = 0;                         // 0 for Q
  Matrix<QuadraticNumber> basis;                // columns span the eigenspace

  std::size_t rank() const { return basis.cols(); }
};

struct JointDecomposition {
  std::vector<JointEigenspace> spaces;
  /// Characteristic polynomial factors whose roots were not enumerated.
  std::vector<std::pair<long, Polynomial>> not_enumerated;
};

/// Splits the ambient space successively by the kernels of A_l - lambda over
/// the roots lambda of each operator's characteristic polynomial. Only genuine
/// eigenvectors survive; generalized eigenvectors are discarded.
JointDecomposition joint_eigenspaces(const std::vector<std::pair<long, QMatrix>>& operators);

/// Matrix of rationals viewed over a quadratic field.
Matrix<QuadraticNumber> lift(const QMatrix& m);

}  // namespace hecke
