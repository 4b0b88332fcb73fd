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


#include "hecke/eigenspace.hpp"

#include <stdexcept>

namespace hecke {

Matrix<QuadraticNumber> lift(const QMatrix& m) {
  return m.map([](const Rational& x) { return QuadraticNumber(x); });
}

JointDecomposition joint_eigenspaces(const std::vector<std::pair<long, QMatrix>>& operators) {
  JointDecomposition out;
  if (operators.empty()) throw std::invalid_argument("joint_eigenspaces: no operators");
  const std::size_t n = operators.front().second.rows();
  if (n == 0) return out;
  JointEigenspace whole;
  whole.basis = Matrix<QuadraticNumber>::identity(n);
  std::vector<JointEigenspace> current{whole};

  for (const auto& [label, a] : operators) {
    if (a.rows() != n || a.cols() != n) throw std::invalid_argument("joint_eigenspaces: shape mismatch");
    RootSplit split = split_roots(charpoly(a));
    for (const auto& f : split.not_enumerated) out.not_enumerated.emplace_back(label, f);
    const Matrix<QuadraticNumber> qa = lift(a);
    std::vector<JointEigenspace> next;
    for (const auto& space : current) {
      const Matrix<QuadraticNumber> image = qa * space.basis;
      for (const auto& root : split.roots) {
        const Integer& rd = root.value.radicand();
        if (rd != 0 && space.radicand != 0 && rd != space.radicand) continue;
        Matrix<QuadraticNumber> shifted = image;
        for (std::size_t i = 0; i < shifted.rows(); ++i)
          for (std::size_t j = 0; j < shifted.cols(); ++j) shifted(i, j) -= root.value * space.basis(i, j);
        Matrix<QuadraticNumber> kernel = nullspace(shifted);
        if (kernel.cols() == 0) continue;
        JointEigenspace child = space;
        child.basis = space.basis * kernel;
        child.eigenvalues[label] = root.value;
        child.minimal_polynomials[label] = root.minimal_polynomial;
        child.choices[label] = root.choice;
        if (rd != 0) child.radicand = rd;
        next.push_back(std::move(child));
      }
    }
    current = std::move(next);
  }
  out.spaces = std::move(current);
  return out;
}

}  // namespace hecke
