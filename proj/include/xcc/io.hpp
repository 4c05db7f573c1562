#ifndef XCC_IO_HPP
#define XCC_IO_HPP

#include <string>

#include "xcc/crossed_complex.hpp"
#include "xcc/simplicial_set.hpp"

namespace xcc {

struct ParseError : Error {
    using Error::Error;
};

/// Simplicial-set document: UTF-8 JSON with fields trunc_level,
/// simplices (dimension -> name array), faces (name -> array, index
/// order d_0..d_n), degeneracies (name -> array or null above the
/// truncation) and nondegenerate (name array). Names must be unique
/// across dimensions within a document. Round trip is the identity.
std::string serialize(const SimplicialSet& k);

/// Structural parse; simplicial identities are validate()'s job, but
/// missing entries, unknown names and wrong-dimension references are
/// parse errors carrying the simplex and index.
SimplicialSet parse_simplicial_set_doc(const std::string& text);

/// Crossed-complex document: objects, edges with endpoints, and per
/// dimension the basis with endpoint and boundary expression in the
/// element grammar; the attached normalizer strategy is recorded so a
/// parsed complex decides equality the way its builder did.
std::string serialize(const FreeCrossedComplex& c);
CrsPtr parse_crossed_complex_doc(const std::string& text);

/// Element grammar:
///   dim 1:   a + b - c      or 0_p
///   dim 2:   g^[w] - h^[w'] (omitted ^[..] means the unit operator)
///   dim >=3: 3*g^[w] - h    (integer weights)
std::string element_to_string(const FreeCrossedComplex& c, const Element& e);
Element parse_element(const FreeCrossedComplex& c, int dim, const std::string& text);

} // namespace xcc

#endif
