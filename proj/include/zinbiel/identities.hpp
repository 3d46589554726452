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

#ifndef ZINBIEL_IDENTITIES_HPP
#define ZINBIEL_IDENTITIES_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "zinbiel/eval.hpp"
#include "zinbiel/expr.hpp"
#include "zinbiel/multilinear.hpp"

namespace zinbiel {

/// Full polarization. Splits f into its multihomogeneous components and
/// replaces each by the multilinear element obtained via inclusion-exclusion
/// over subsets of the fresh variables assigned to each slot (fresh indices
/// 1..d, blocks in increasing original-variable order). In characteristic 0
/// the output generates the same T-ideal as f; for f homogeneous of degree n
/// in one variable, substituting x back for every fresh variable gives n! f.
/// Throws std::invalid_argument on zero input.
std::vector<MultilinearElement> multilinearize(const Element& f);

/// An expression is an identity of the whole variety iff its normal form
/// in the free algebra is zero.
bool is_identity_variety(const ExprPtr& e);

struct OneGenWitness {
    std::size_t component; // index into the multilinearization
    LambdaTuple lambda;
    Rational value;
};

/// Two independent verdicts on whether e vanishes identically in the
/// one-generated free algebra: the structural one (normal form zero) and
/// the evaluation one (polarize, then search for a psi witness on each
/// component). They agree whenever the witness enumeration is conclusive.
struct OneGenVerdict {
    enum class Evaluation { Identity, WitnessFound, Inconclusive };

    bool structural_identity;
    Evaluation evaluation;
    std::optional<OneGenWitness> witness;
    std::size_t components;

    bool conclusive() const noexcept { return evaluation != Evaluation::Inconclusive; }
};

OneGenVerdict is_identity_one_generated(const ExprPtr& e, unsigned max_weight);

/// The multilinear degree-d slice of the T-ideal generated by a set of
/// identities, as an exact span inside the d!-dimensional multilinear
/// component.
///
/// Correctness of the generation procedure: in characteristic 0 the
/// generators may be replaced by their multilinearizations. Any multilinear
/// consequence of degree d is a sum of products in which one substitution
/// instance of a generator occurs as an innermost factor; multilinearity
/// forces that instance to live on a subset S of the variables, with each
/// generator slot receiving a monomial in a block of a set partition of S,
/// and every surrounding product to multiply by monomials in complementary
/// variables. Monomials are spanned by basis words, so seeding every block
/// substitution instance and then closing under one-sided multiplication by
/// basis words in complementary variables, level by level over |S|, spans
/// the whole slice; the ambient dimension d! is finite, so the closure is a
/// fixpoint.
struct SpanLevel {
    std::size_t degree;
    std::size_t dimension;
    std::size_t full_dimension; // degree!
    std::vector<MultilinearElement> basis;
};

SpanLevel consequence_span(const std::vector<Element>& generators, std::size_t degree);

/// Per-degree consequence dimensions of the single identity x^t = 0 for
/// t <= d <= max_degree, and the least degree whose multilinear component
/// fills up completely — in characteristic 0 that degree is a nilpotency
/// degree for the variety cut out by x^t.
struct ConsequenceReport {
    unsigned nil_index;
    std::size_t max_degree;
    std::vector<SpanLevel> levels;
    std::optional<std::size_t> nilpotency_degree;
};

ConsequenceReport nil_lab(unsigned nil_index, std::size_t max_degree);

/// Checks that the symmetrized product is commutative on every basis-word
/// pair and associative on every basis-word triple of total degree up to
/// max_total_degree. Pairs and triples are enumerated up to injective
/// relabeling of generators (restricted-growth sequences), which covers
/// every alphabet. Requires max_total_degree >= 3.
bool symmetrization_check(std::size_t max_total_degree);

} // namespace zinbiel

#endif
