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

#ifndef ZINBIEL_MULTILINEAR_HPP
#define ZINBIEL_MULTILINEAR_HPP

#include <cstddef>
#include <map>
#include <vector>

#include "zinbiel/element.hpp"

namespace zinbiel {

/// One-line notation: values are 1..n, each exactly once.
using Permutation = std::vector<unsigned>;

/// A degree-n multilinear combination sum_{sigma in S_n} alpha_sigma
/// x_{sigma 1}(x_{sigma 2}(...x_{sigma n})), stored as a coefficient map
/// over permutations. Interconverts losslessly with the Element view
/// (the word of sigma is its one-line notation).
class MultilinearElement {
public:
    explicit MultilinearElement(std::size_t degree);

    /// Degree inferred from the element; throws on zero input.
    static MultilinearElement from_element(const Element& e);
    /// Validates that every word of e is a permutation word of 1..degree.
    static MultilinearElement from_element(const Element& e, std::size_t degree);

    Element to_element() const;

    std::size_t degree() const noexcept { return degree_; }
    bool is_zero() const noexcept { return coefficients_.empty(); }
    const std::map<Permutation, Rational>& coefficients() const noexcept { return coefficients_; }

    void add(const Permutation& sigma, const Rational& c);

    bool operator==(const MultilinearElement& other) const = default;

private:
    std::size_t degree_;
    std::map<Permutation, Rational> coefficients_;
};

} // namespace zinbiel

#endif
