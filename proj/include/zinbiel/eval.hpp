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

#ifndef ZINBIEL_EVAL_HPP
#define ZINBIEL_EVAL_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "zinbiel/element.hpp"
#include "zinbiel/multilinear.hpp"
#include "zinbiel/rational.hpp"

namespace zinbiel {

/// Positive integer weights (lambda_1, ..., lambda_n).
using LambdaTuple = std::vector<unsigned>;

/// P_n(lambda) = prod_{k=1}^{n-1} lambda_k / (lambda_k + ... + lambda_n),
/// with P_1 = 1 (empty product). Satisfies the recursion
/// P_n(lambda) = (lambda_1 / sum lambda) P_{n-1}(lambda_2, ..., lambda_n).
Rational p_n(const LambdaTuple& lambda);

/// Q_n(lambda) = 1 / prod_{k=2}^{n} (lambda_k + ... + lambda_n), with
/// Q_1 = 1 and Q_2(l1, l2) = 1/l2. Related to P_n by
/// P_n(lambda) = (prod lambda / sum lambda) Q_n(lambda).
Rational q_n(const LambdaTuple& lambda);

/// Generator index -> positive weight.
using WeightAssignment = std::map<unsigned, unsigned>;

struct PsiValue {
    Rational coefficient;
    unsigned long weight;
};

/// Image of a basis word under the evaluation homomorphism psi with
/// psi(x_i) = X_{assign(i)}: the word x_{i1}(...x_{in}) maps to
/// P_n(lambda_{i1}, ..., lambda_{in}) X_{sum of weights}. Throws
/// std::invalid_argument when a letter of w has no assigned weight.
PsiValue psi_word(const Word& w, const WeightAssignment& assign);

/// An element of the one-generated free algebra written in the scaled
/// basis X_m = m! x^m: a finite map weight -> coefficient with no zeros
/// stored. The product is X_i X_j = (i / (i+j)) X_{i+j}, extended
/// bilinearly.
class OneVarElement {
public:
    OneVarElement() = default;

    static OneVarElement basis(unsigned long weight, Rational coefficient = 1);

    bool is_zero() const noexcept { return terms_.empty(); }
    const std::map<unsigned long, Rational>& terms() const noexcept { return terms_; }
    Rational coefficient(unsigned long weight) const;
    void add(unsigned long weight, const Rational& c);

    OneVarElement& operator+=(const OneVarElement& other);
    friend OneVarElement operator+(OneVarElement a, const OneVarElement& b) { return a += b; }

    bool operator==(const OneVarElement& other) const = default;

private:
    std::map<unsigned long, Rational> terms_;
};

OneVarElement mul(const OneVarElement& f, const OneVarElement& g);

/// Linear extension of psi_word.
OneVarElement psi_element(const Element& f, const WeightAssignment& assign);

/// X_m = m! x^m written out in the word basis of DL<x>.
Element to_free_element(const OneVarElement& f);

/// Inverse conversion; requires every letter of e to be the generator 1.
OneVarElement one_var_element(const Element& e);

/// Outcome of the multilinear-identity rank certification at one degree.
/// Rows are indexed by lambda tuples (entries <= max_weight, lexicographic
/// enumeration, early-stopped at full rank), columns by sigma in S_n in
/// lexicographic order, entries P_n(lambda_{sigma 1}, ..., lambda_{sigma n}).
/// rank == n! certifies that no nontrivial multilinear identity of degree n
/// holds in the one-generated free algebra; the witnesses are the tuples
/// whose rows form an invertible submatrix.
struct RankCertificate {
    std::size_t degree;
    std::size_t order; // n!
    std::size_t rank;
    bool certified;
    unsigned max_weight;
    std::vector<LambdaTuple> witnesses;
};

RankCertificate theorem1_rank(std::size_t degree, unsigned max_weight);

/// Grows the weight bound geometrically (2, 4, 8, ... up to cap) until the
/// rank certifies or stabilizes.
RankCertificate theorem1_certify(std::size_t degree, unsigned max_weight_cap = 8);

struct Witness {
    LambdaTuple lambda;
    Rational value; // sum_sigma alpha_sigma P_n(lambda after sigma), nonzero
};

/// First lambda tuple (deterministic lexicographic enumeration, entries
/// <= max_weight) on which m evaluates to a nonzero multiple of X_{sum},
/// or nullopt when the enumeration is exhausted. A nonzero multilinear
/// element always has such a witness for a large enough bound.
std::optional<Witness> witness_search(const MultilinearElement& m, unsigned max_weight);

/// Descent step at n = |prefix| + 1: multiplying Q_n(prefix, lambda_n) by
/// lambda_n, cancelling the trailing atomic lambda_n factor symbolically
/// and substituting lambda_n = 0 must yield Q_{n-1}(prefix); and for
/// permutations with sigma(n) != n the denominator of the permuted Q_n
/// carries no isolated lambda_n factor.
struct DescentReport {
    std::size_t n;
    Rational limit_value;    // lambda_n Q_n(prefix, lambda_n) at lambda_n = 0
    Rational expected;       // Q_{n-1}(prefix)
    bool limit_matches;
    bool divisibility_ok;
    std::size_t permutations_checked;

    bool ok() const noexcept { return limit_matches && divisibility_ok; }
};

DescentReport descent_report(const std::vector<unsigned>& prefix);
bool descent_check(const std::vector<unsigned>& prefix);

} // namespace zinbiel

#endif
