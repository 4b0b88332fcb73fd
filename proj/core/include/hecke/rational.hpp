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

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace hecke {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised when an internal mathematical invariant fails. The CLI maps this
/// to exit code 1; it never signals bad user input.
class AssertionFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Throws AssertionFailure carrying `what` unless `cond` holds.
inline void check(bool cond, const std::string& what) {
  if (!cond) throw AssertionFailure(what);
}

Rational make_rational(const Integer& num, const Integer& den);
inline Rational make_rational(long num, long den = 1) {
  return make_rational(Integer(num), Integer(den));
}

/// Parses "a", "-a", "a/b" (no whitespace, no decimals).
Rational parse_rational(std::string_view text);

std::string to_string(const Integer& x);
/// "num/den" in lowest terms, or "num" for integers.
std::string to_string(const Rational& x);

Integer ipow(const Integer& base, unsigned long exponent);
/// base^exponent for any integer exponent; base must be nonzero if exponent < 0.
Rational rpow(const Rational& base, long exponent);

inline bool is_integral(const Rational& x) { return x.get_den() == 1; }

}  // namespace hecke
