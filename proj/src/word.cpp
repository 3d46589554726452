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

#include "zinbiel/word.hpp"

#include <stdexcept>

namespace zinbiel {

Word::Word(std::vector<unsigned> letters) : letters_(std::move(letters)) {
    if (letters_.empty()) {
        throw std::invalid_argument("word must be nonempty");
    }
    for (unsigned letter : letters_) {
        if (letter == 0) {
            throw std::invalid_argument("generator indices start at 1");
        }
    }
}

Word Word::generator(unsigned index) {
    return Word(std::vector<unsigned>{index});
}

std::vector<unsigned> Word::tail() const {
    return {letters_.begin() + 1, letters_.end()};
}

std::strong_ordering Word::operator<=>(const Word& other) const noexcept {
    if (auto cmp = letters_.size() <=> other.letters_.size(); cmp != 0) {
        return cmp;
    }
    return letters_ <=> other.letters_;
}

} // namespace zinbiel
