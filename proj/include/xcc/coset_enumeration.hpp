#ifndef XCC_COSET_ENUMERATION_HPP
#define XCC_COSET_ENUMERATION_HPP

#include <cstddef>
#include <vector>

#include "xcc/groupoid.hpp"

namespace xcc {

/// Regular representation of a finitely presented group, produced by
/// coset enumeration over the trivial subgroup. Letters follow the
/// groupoid convention: +(g+1) / -(g+1) for generator g.
struct EnumeratedGroup {
    int order = 0;
    /// action[element][2*g + (sign<0)] = element * g^{+-1}
    std::vector<std::vector<int>> action;
    /// canonical word (shortest, BFS in generator order) per element
    std::vector<std::vector<Letter>> rep;

    int identity() const { return 0; }
    int apply(int elt, Letter l) const {
        int g = edge_of(l);
        return action[elt][2 * g + (positive(l) ? 0 : 1)];
    }
    int apply_word(int elt, const std::vector<Letter>& w) const {
        for (Letter l : w) elt = apply(elt, l);
        return elt;
    }
};

/// HLT-style Todd-Coxeter on the trivial subgroup. Throws CapacityError
/// once more than `budget` cosets have been defined; for a presentation
/// of a finite group a sufficient budget always terminates.
EnumeratedGroup enumerate_group(int ngens, const std::vector<std::vector<Letter>>& relators,
                                std::size_t budget);

} // namespace xcc

#endif
