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

#ifndef ZINBIEL_LINALG_HPP
#define ZINBIEL_LINALG_HPP

#include <cstddef>
#include <vector>

#include "zinbiel/rational.hpp"

namespace zinbiel {

/// Incremental row space over Q with deterministic pivoting. Rows are
/// cleared of denominators and stripped of integer content, then reduced
/// fraction-free against the stored echelon rows (cross-multiplication,
/// content stripped after every step), so no rational arithmetic happens
/// during elimination. Pivot columns are strictly increasing, which makes
/// membership a straight reduction to zero.
class RowSpace {
public:
    explicit RowSpace(std::size_t width);

    std::size_t width() const noexcept { return width_; }
    std::size_t rank() const noexcept { return rows_.size(); }

    /// Inserts a row; returns true when the rank grew.
    bool insert(const std::vector<Rational>& row);
    bool insert(std::vector<Integer> row);

    bool contains(const std::vector<Rational>& row) const;
    bool contains(std::vector<Integer> row) const;

private:
    struct EchelonRow {
        std::size_t pivot;
        std::vector<Integer> entries;
    };

    // Reduces in place; returns the leading column or width_ when zero.
    std::size_t reduce(std::vector<Integer>& row) const;

    std::size_t width_;
    std::vector<EchelonRow> rows_; // sorted by pivot column
};

std::vector<Integer> clear_denominators(const std::vector<Rational>& row);

} // namespace zinbiel

#endif
