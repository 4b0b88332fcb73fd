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


#include "forms.hpp"

#include <cctype>
#include <stdexcept>

namespace hecke::cli {

long FormExpr::weight() const {
  long w = 12 * delta_power;
  for (long k : eisenstein) w += k;
  return w;
}

QSeries FormExpr::series(std::size_t prec) const {
  QSeries s = QSeries::constant(scalar, prec, 0);
  for (long k : eisenstein) s = series_product(s, hecke::eisenstein(k, prec));
  if (delta_power) s = series_product(s, series_power(delta_series(prec), static_cast<unsigned long>(delta_power)));
  return s;
}

FormExpr parse_form(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty form expression");
  FormExpr f;
  std::size_t start = 0;
  bool any = false;
  while (start <= text.size()) {
    std::size_t star = text.find('*', start);
    std::string tok = text.substr(start, star == std::string::npos ? std::string::npos : star - start);
    if (tok.empty()) throw std::invalid_argument("empty factor in '" + text + "'");
    if (tok == "delta" || tok == "Delta") {
      ++f.delta_power;
      any = true;
    } else if (tok[0] == 'E' && tok.size() > 1) {
      for (std::size_t i = 1; i < tok.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(tok[i]))) throw std::invalid_argument("bad factor '" + tok + "'");
      if (tok.size() > 5) throw std::invalid_argument("weight too large in '" + tok + "'");
      long k = std::stol(tok.substr(1));
      if (k < 4 || k % 2) throw std::invalid_argument("E_k needs even k >= 4, got '" + tok + "'");
      f.eisenstein.push_back(k);
      any = true;
    } else {
      if (!std::isdigit(static_cast<unsigned char>(tok.back())))
        throw std::invalid_argument("unknown factor '" + tok + "'; expected delta, E<k> or a rational");
      f.scalar *= parse_rational(tok);
    }
    if (star == std::string::npos) break;
    start = star + 1;
  }
  if (!any) throw std::invalid_argument("form '" + text + "' has no modular factor");
  if (f.scalar == 0) throw std::invalid_argument("form '" + text + "' is zero");
  return f;
}

}  // namespace hecke::cli
