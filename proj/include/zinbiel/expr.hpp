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

#ifndef ZINBIEL_EXPR_HPP
#define ZINBIEL_EXPR_HPP

#include <memory>
#include <vector>

#include "zinbiel/element.hpp"
#include "zinbiel/rational.hpp"

namespace zinbiel {

class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// An arbitrary nonassociative expression before reduction: generators,
/// sums, scalar multiples, binary products and left powers a^{i+1} = a a^i.
/// Exponents are >= 1 and sums nonempty.
class Expr {
public:
    enum class Kind { Generator, Sum, Scalar, Product, Power };

    static ExprPtr generator(unsigned index);
    static ExprPtr sum(std::vector<ExprPtr> terms);
    static ExprPtr scalar(Rational coefficient, ExprPtr child);
    static ExprPtr product(ExprPtr lhs, ExprPtr rhs);
    static ExprPtr power(ExprPtr base, unsigned exponent);

    Kind kind() const noexcept { return kind_; }
    unsigned generator_index() const;
    const std::vector<ExprPtr>& terms() const;
    const Rational& coefficient() const;
    const ExprPtr& child() const; // Scalar and Power
    const ExprPtr& lhs() const;
    const ExprPtr& rhs() const;
    unsigned exponent() const;

private:
    Expr() = default;

    Kind kind_{Kind::Generator};
    unsigned index_{0};
    unsigned exponent_{0};
    Rational coefficient_;
    std::vector<ExprPtr> children_;
};

/// Canonical form of an expression, computed by term rewriting alone:
/// monomial product trees are reduced with (uv)w -> u(wv) + u(vw),
/// innermost-leftmost, until every monomial is a right comb, i.e. a
/// left-normed basis word. Independent of the half-shuffle product.
Element normal_form(const ExprPtr& e);

/// The same value computed bottom-up with mul(); the two routes must agree
/// on every input.
Element evaluate(const ExprPtr& e);

} // namespace zinbiel

#endif
