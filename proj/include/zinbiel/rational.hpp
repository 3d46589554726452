/*
  Copyright 2026 the zinbiel authors

  Licensed under the Apache License, Version 2.0 (the "License");
  you may not use this file except in compliance with the License.
  You may obtain a copy of the License at

  http://www.apache.org/licenses/LICENSE-2.0

  Unless required by applicable law or agreed to in writing, software
  distributed under the License is distributed on an "AS IS" BASIS,
  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
  See the License for the specific language governing permissions and
  limitations under the License.
*/

#ifndef ZINBIEL_RATIONAL_HPP
#define ZINBIEL_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace zinbiel {

/// Exact rational coefficients over Q. GMP keeps values canonical
/// (lowest terms, positive denominator) after every arithmetic step.
using Rational = mpq_class;
using Integer = mpz_class;

/// Rational from an integer pair; throws std::invalid_argument when den == 0.
Rational make_rational(const Integer& num, const Integer& den);

Integer binomial(unsigned long n, unsigned long k);
Integer factorial(unsigned long n);

/// "p" or "p/q"; the sign sits on the numerator.
std::string rational_to_string(const Rational& value);

} // namespace zinbiel

#endif
