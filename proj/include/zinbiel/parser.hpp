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

#ifndef ZINBIEL_PARSER_HPP
#define ZINBIEL_PARSER_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "zinbiel/expr.hpp"

namespace zinbiel {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column);

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// Grammar:
///   expr     := ['-'] term (('+' | '-') term)*
///   term     := factor ['*' factor]          -- '*' does not associate; a
///                                               chain needs parentheses
///   factor   := atom ('^' INT)*
///   atom     := RATIONAL | word | '(' expr ')'
///   word     := GEN ['(' GEN+ ')']           -- canonical left-normed word
///   RATIONAL := INT ['/' INT]
///   GEN      := 'x' INT
/// A rational is only meaningful as a scalar multiplier next to '*'; bare
/// constants, exponent 0 and generator index 0 are rejected. Errors carry
/// 1-based line and column.
ExprPtr parse_expression(std::string_view input);

} // namespace zinbiel

#endif
