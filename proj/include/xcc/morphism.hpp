#ifndef XCC_MORPHISM_HPP
#define XCC_MORPHISM_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "xcc/crossed_complex.hpp"

namespace xcc {

/// Morphism of free crossed complexes, stored as a basis-value table and
/// extended structurally over elements. May be partial at the top:
/// defined_through caps the source dimensions with assigned values
/// (truncation makes some derived morphisms stop one level short).
struct Morphism {
    CrsPtr source;
    CrsPtr target;
    std::vector<int> on_object;                   // object -> object
    std::vector<Word> on_edge;                    // edge -> word in target
    std::vector<std::vector<Element>> on_gen;     // [dim-2][gen] -> element in target
    int defined_through = 0;

    Word word(const Word& w) const;               // image of a dim-1 word
    Element operator()(const Element& e) const;   // structural extension
};

struct MorphismBuildReport {
    std::optional<Morphism> morphism;
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

/// Validates the geometric conditions (s f x = f s x on edges,
/// t f x = f t x for all basis dims >= 1, delta f x = f delta x for
/// dims >= 2, decided under the target's equality) and returns either
/// the morphism or the violation list.
MorphismBuildReport build_morphism(CrsPtr source, CrsPtr target, std::vector<int> on_object,
                                   std::vector<Word> on_edge,
                                   std::vector<std::vector<Element>> on_gen, int defined_through);

/// build_morphism that throws on violations.
Morphism make_morphism(CrsPtr source, CrsPtr target, std::vector<int> on_object,
                       std::vector<Word> on_edge, std::vector<std::vector<Element>> on_gen,
                       int defined_through);

Morphism identity_morphism(const CrsPtr& c);

/// g after f (apply f, then g).
Morphism compose_morphisms(const Morphism& f, const Morphism& g);

/// Extension of a basis map along a morphism f: a derivation on dim-1
/// words, h(u+v) = h(u)^{f v} + h(v), and an f-operator morphism on
/// dims >= 2, additive with h(x^c) = h(x)^{f c}. Values live one or more
/// dimensions up in f's target; table dimensions without values make the
/// extension partial there.
class BasisMapExtension {
public:
    BasisMapExtension(Morphism f, std::vector<Element> edge_values,
                      std::vector<std::vector<Element>> gen_values);

    Element on_word(const Word& w) const;
    /// dims >= 2 (dim-1 elements delegate to on_word)
    Element on_element(const Element& e) const;

    bool has_dim(int dim) const;

private:
    Morphism f_;
    std::vector<Element> edge_values_;
    std::vector<std::vector<Element>> gen_values_;
};

/// Graded subset of the free basis; dim-1 entries must be loops.
struct GradedGenSet {
    std::vector<int> edges;
    std::vector<std::vector<int>> gens;  // [dim-2]
    bool contains_edge(int e) const;
    bool contains_gen(int dim, int g) const;
};

struct KillResult {
    CrsPtr quotient;
    Morphism projection;
    std::vector<int> object_map;              // identity, kept for symmetry
    std::vector<int> edge_map;                // old edge -> new edge or -1
    std::vector<std::vector<int>> gen_map;    // [dim-2] old gen -> new gen or -1
};

/// Quotient by the normal closure of a graded basis subset whose members
/// form a normal structure (the boundary of each killed generator must
/// collapse into lower killed generators; verified bottom-up, reported
/// per offending generator). The quotient is free on the surviving basis
/// with boundaries rewritten by deleting killed letters and terms; its
/// normalizer is re-selected from the projected presentation unless
/// overridden.
KillResult kill_basis(const CrsPtr& c, const GradedGenSet& s, NormalizerPtr normalizer_override = nullptr,
                      std::size_t budget = kDefaultEnumerationBudget);

/// Restriction of a free crossed complex to a lower truncation level;
/// the normalizer carries over unchanged (it only involves dims <= 2).
CrsPtr truncate(const CrsPtr& c, int level);

} // namespace xcc

#endif
