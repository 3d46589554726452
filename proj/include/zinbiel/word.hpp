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

#ifndef ZINBIEL_WORD_HPP
#define ZINBIEL_WORD_HPP

#include <compare>
#include <cstddef>
#include <vector>

namespace zinbiel {

/// A basis monomial of the free Zinbiel algebra: the left-normed word
/// x_{i1}(x_{i2}(...(x_{i_{n-1}} x_{i_n}))) stored as its letter sequence
/// (i1, ..., in). Letters are generator indices, always >= 1; the sequence
/// is never empty (the algebra has no unit).
class Word {
public:
    explicit Word(std::vector<unsigned> letters);

    static Word generator(unsigned index);

    const std::vector<unsigned>& letters() const noexcept { return letters_; }
    std::size_t degree() const noexcept { return letters_.size(); }
    unsigned first_letter() const noexcept { return letters_.front(); }

    /// Letters after the first; empty for a single generator.
    std::vector<unsigned> tail() const;

    bool operator==(const Word& other) const noexcept = default;

    /// Canonical term order: degree first, then lexicographic on letters.
    std::strong_ordering operator<=>(const Word& other) const noexcept;

private:
    std::vector<unsigned> letters_;
};

} // namespace zinbiel

#endif
