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

#ifndef ZINBIEL_ELEMENT_HPP
#define ZINBIEL_ELEMENT_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "zinbiel/rational.hpp"
#include "zinbiel/word.hpp"

namespace zinbiel {

/// A finite Q-linear combination of basis words, kept canonical: zero
/// coefficients are never stored and terms iterate in the word order
/// (degree, then lexicographic). Values are immutable in spirit; every
/// operation below returns a fresh element.
class Element {
public:
    Element() = default; // zero

    static Element from_word(Word w);
    static Element term(Word w, Rational coefficient);

    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t term_count() const noexcept { return terms_.size(); }
    const std::map<Word, Rational>& terms() const noexcept { return terms_; }

    /// Coefficient of a word; zero when absent.
    Rational coefficient(const Word& w) const;

    /// Accumulates c * w, erasing the entry when the sum cancels.
    void add_term(const Word& w, const Rational& c);

    /// Degree shared by all terms, or nullopt when inhomogeneous or zero.
    std::optional<std::size_t> homogeneous_degree() const;

    /// Largest term degree; 0 for the zero element.
    std::size_t max_degree() const;

    Element& operator+=(const Element& other);
    Element& operator-=(const Element& other);
    Element& operator*=(const Rational& scalar);

    friend Element operator+(Element lhs, const Element& rhs) { return lhs += rhs; }
    friend Element operator-(Element lhs, const Element& rhs) { return lhs -= rhs; }
    friend Element operator*(Element e, const Rational& c) { return e *= c; }
    friend Element operator*(const Rational& c, Element e) { return e *= c; }
    Element operator-() const;

    bool operator==(const Element& other) const = default;

private:
    std::map<Word, Rational> terms_;
};

/// All interleavings of u and v preserving internal order, with
/// multiplicities. Total multiplicity is C(|u|+|v|, |u|); equal letters
/// merge. Either argument may be empty.
std::map<std::vector<unsigned>, Integer> shuffle(const std::vector<unsigned>& u,
                                                 const std::vector<unsigned>& v);

/// Product of two basis words: u * v = u1 (u' sh v), the half-shuffle that
/// prepends the head of u to every shuffle of its tail with v. Every output
/// word starts with u's first letter and has degree deg(u) + deg(v).
Element mul_basis(const Word& u, const Word& v);

/// Bilinear extension of mul_basis.
Element mul(const Element& f, const Element& g);

/// Left-iterated power: power(f, 1) = f, power(f, i+1) = f * power(f, i).
/// Rejects exponent 0 (the algebra is non-unital).
Element power(const Element& f, unsigned exponent);

/// Symmetrized product f * g + g * f; commutative and (tested) associative.
Element star(const Element& f, const Element& g);

/// The scalar c with x^i x^j = c x^{i+j}, obtained by explicit product
/// expansion. Throws std::logic_error if the product has any other shape.
Rational power_product_coefficient(unsigned i, unsigned j);

} // namespace zinbiel

#endif
