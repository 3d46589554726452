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

#ifndef ZINBIEL_PRINTER_HPP
#define ZINBIEL_PRINTER_HPP

#include <string>

#include "zinbiel/element.hpp"

namespace zinbiel {

/// "x1" or "x1(x2 x3)".
std::string to_text(const Word& w);

/// Canonical rendering: terms in canonical order joined with " + " / " - ",
/// coefficient magnitudes other than 1 written as "p/q * word". The zero
/// element prints as "0". Output re-parses to an equal element.
std::string to_text(const Element& e);

/// {"terms":[{"word":[i1,...],"num":"...","den":"..."}]} in canonical term
/// order; numerator carries the sign, denominator is positive.
std::string to_json(const Element& e);

} // namespace zinbiel

#endif
