#ifndef XCC_PI1_NORMALIZER_HPP
#define XCC_PI1_NORMALIZER_HPP

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "xcc/groupoid.hpp"

namespace xcc {

/// Canonical-form strategy for groupoid words modulo delta_2 C_2.
/// canon is idempotent, preserves endpoints, and respects composition:
/// canon(u+v) = canon(canon(u)+canon(v)). Two words are equal in the
/// fundamental groupoid iff their canonical forms coincide, provided
/// the strategy is valid for the complex it is attached to (a caller
/// obligation; builders select automatically).
class Pi1Normalizer {
public:
    virtual ~Pi1Normalizer() = default;
    virtual Word canon(const Word& w) const = 0;
    /// strategy tag: "free", "simply_connected" or "finite_enumeration"
    virtual std::string kind() const = 0;
    virtual std::size_t budget() const { return 0; }
};

using NormalizerPtr = std::shared_ptr<const Pi1Normalizer>;

/// canon = reduce. Valid when the dim-2 basis is empty or every
/// boundary relator is freely trivial.
NormalizerPtr make_free_normalizer();

/// Collapses parallel words: canon(w) is the spanning-forest geodesic
/// between the endpoints of w (the identity for loops). Valid when every
/// component of the fundamental groupoid is trivial.
NormalizerPtr make_simply_connected_normalizer(const Graph& g);

/// Decides the word problem from the presentation (graph, relator loops):
/// eliminates single-letter relators, contracts a spanning forest, then
/// runs bounded coset enumeration on each component group. Components
/// whose rewritten relator set is empty stay free (exact). Throws
/// CapacityError if enumeration exceeds `budget` cosets.
NormalizerPtr make_finite_enumeration_normalizer(const Graph& g, std::vector<Word> relators,
                                                 std::size_t budget);

constexpr std::size_t kDefaultEnumerationBudget = 100000;

/// Builder policy: no relators -> free; otherwise finite enumeration.
NormalizerPtr select_normalizer(const Graph& g, const std::vector<Word>& relators,
                                std::size_t budget = kDefaultEnumerationBudget);

} // namespace xcc

#endif
