#ifndef XCC_HOMOTOPY_HPP
#define XCC_HOMOTOPY_HPP

#include "xcc/morphism.hpp"
#include "xcc/tensor_constructs.hpp"

namespace xcc {

/// Homotopy (h, f): basis-value tables h_n: basis_n -> D_{n+1} over a
/// base morphism f, subject to t(h x) = t(f x). Extends to all elements
/// as an f-derivation in dimension 1 and an f-operator morphism above.
/// defined_through caps the source dimensions carrying values (the top
/// dimension of a truncated complex cannot, since values would live one
/// dimension higher).
struct Homotopy {
    Morphism f;
    std::vector<Word> h0;                      // object -> dim-1 word in target
    std::vector<Element> h1;                   // edge -> dim-2 element
    std::vector<std::vector<Element>> hn;      // [dim-2][gen] -> dim n+1 element
    int defined_through = 0;

    Element on_word(const Word& w) const;      // derivation extension
    Element on_element(const Element& e) const;
};

struct HomotopyBuildReport {
    std::optional<Homotopy> homotopy;
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

HomotopyBuildReport build_homotopy(Morphism f, std::vector<Word> h0, std::vector<Element> h1,
                                   std::vector<std::vector<Element>> hn, int defined_through);

Homotopy make_homotopy(Morphism f, std::vector<Word> h0, std::vector<Element> h1,
                       std::vector<std::vector<Element>> hn, int defined_through);

/// The morphism f0 with h: f0 ~ f:
///   f0 x = s h0 x                                        (dim 0)
///   f0 x = h0(sx) + f x + delta_2 h1 x - h0(tx)          (dim 1)
///   f0 x = {f x + h delta_n x + delta_{n+1} h x}^{-h0(tx)} (dim >= 2)
/// Defined through min(defined_through, trunc - ...): dimension n needs
/// h at n and n-1. The result is validated as a morphism.
Morphism derived_morphism(const Homotopy& h);

/// The homotopy as a cylinder morphism I(x)C -> D: 0&r -> f0 r,
/// 1&r -> f r, i&r -> h r. Returns the cylinder alongside the morphism.
struct CylinderMorphism {
    CylinderResult cyl;
    Morphism morphism;
};

CylinderMorphism cylinder_morphism(const Homotopy& h);

} // namespace xcc

#endif
