#ifndef XCC_PI_FUNCTOR_HPP
#define XCC_PI_FUNCTOR_HPP

#include "xcc/crossed_complex.hpp"
#include "xcc/simplicial_set.hpp"

namespace xcc {

/// The fundamental crossed complex of a simplicial set together with its
/// simplicial indexing: generator i of dimension n is simplex i of K_n
/// (objects for n = 0, edges for n = 1).
struct PiComplex {
    SimplicialSet K;
    CrsPtr crs;
};

/// Homotopy addition boundary of an n-simplex, n >= 2, expressed over the
/// generators of dimensions < n of `c` (which must already hold them):
///   n = 2:  -d1 x + d2 x + d0 x
///   n = 3:  (d3 x)^{d0^2 x} - d0 x - d2 x + d1 x
///   n >= 4: (dn x)^{d0^{n-1} x} + sum_{i<n} (-1)^{n-i} di x
Element hal_boundary(const SimplicialSet& K, const FreeCrossedComplex& c, int dim, int x);

/// Free crossed complex on the simplices of K with HAL boundaries.
/// Requires validate(K) clean. The normalizer is selected from the
/// pi1 presentation (free when K_2 is empty, bounded enumeration
/// otherwise) unless overridden.
PiComplex fundamental_crossed_complex(const SimplicialSet& K, NormalizerPtr normalizer_override = nullptr,
                                      std::size_t budget = kDefaultEnumerationBudget);

/// Generating graph K_1 (s = d1, t = d0) with relator words delta_2 x for
/// x in K_2; components counted over the edge graph.
struct Pi1Presentation {
    Graph graph;
    std::vector<Word> relators;
    int component_count = 0;
};

Pi1Presentation pi1_presentation(const SimplicialSet& K);

} // namespace xcc

#endif
