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

#include <string>

#include "hecke/qseries.hpp"

namespace hecke::cli {

/// A product of factors such as "delta", "E4*delta" or "5*E12": each factor
/// is a rational constant, delta (or Delta), or E<k> for even k >= 4.
struct FormExpr {
  Rational scalar = 1;
  std::vector<long> eisenstein;  // weights of the E_k factors
  long delta_power = 0;

  long weight() const;
  QSeries series(std::size_t prec) const;
};

/// Throws std::invalid_argument with a readable message on bad input.
FormExpr parse_form(const std::string& text);

}  // namespace hecke::cli
