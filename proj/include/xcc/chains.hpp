#ifndef XCC_CHAINS_HPP
#define XCC_CHAINS_HPP

#include "xcc/bigint.hpp"
#include "xcc/crossed_complex.hpp"

namespace xcc {

/// Chain complex of free modules over the fundamental groupoid of a free
/// crossed complex: degree 0 is free on the objects (the module Z->G),
/// degree 1 on the dim-1 basis (the universal-derivation module), degree
/// n >= 2 on the dim-n basis (abelianized in degree 2). Boundaries are
/// module expressions: integer combinations of (basis index, canonical
/// operator word).
struct ChainComplexOverGroupoid {
    CrsPtr base;
    /// boundary[n-1][j] = boundary of degree-n basis element j, expressed
    /// over the degree n-1 basis; n runs 1..trunc
    std::vector<std::vector<ModuleSum>> boundary;

    int max_degree() const { return static_cast<int>(boundary.size()); }
    int basis_size(int degree) const;
    std::string basis_label(int degree, int j) const;
};

/// Universal derivation on words: alpha(g) = (g, 1) on edge generators,
/// alpha(u+v) = alpha(u)^{phi v} + alpha(v), operators canonicalized by
/// the complex's normalizer (phi is the projection to pi1).
ModuleSum fox_derivative(const FreeCrossedComplex& c, const Word& w);

/// The chain functor: boundary_1(e: p->q) = (1_p)^{phi e} - 1_q,
/// boundary_2 = fox_derivative of delta_2, boundary_3 = abelianized
/// delta_3, boundary_n = delta_n above.
ChainComplexOverGroupoid nabla(const CrsPtr& c);

/// dd = 0 and augmentation-kills-boundary, checked symbolically; empty
/// report means the chain complex axioms hold.
std::vector<std::string> audit_chain_complex(const ChainComplexOverGroupoid& x);

/// Integer matrix with row/column basis labels.
struct IntMatrix {
    int rows = 0, cols = 0;
    std::vector<std::string> row_labels, col_labels;
    std::vector<std::vector<BigInt>> a;

    static IntMatrix zero(int rows, int cols);
    static IntMatrix identity(int n);
    BigInt& at(int i, int j) { return a[i][j]; }
    const BigInt& at(int i, int j) const { return a[i][j]; }
};

IntMatrix mat_mul(const IntMatrix& x, const IntMatrix& y);

/// Coefficient-sum augmentation: every operator word becomes 1. Returns
/// the boundary matrices of degrees 1..max_degree; matrix n has one
/// column per degree-n basis element and one row per degree-(n-1) one.
std::vector<IntMatrix> augment(const ChainComplexOverGroupoid& x);

struct SNFResult {
    IntMatrix d, u, v;                    // d = u * m * v, u and v unimodular
    std::vector<BigInt> invariant_factors;  // nonzero diagonal, d1 | d2 | ...
    int rank() const { return static_cast<int>(invariant_factors.size()); }
};

/// Exact Smith normal form; pivoting picks the entry of least absolute
/// value to limit growth. Deterministic.
SNFResult smith_normal_form(const IntMatrix& m);

struct HomologyGroup {
    int rank = 0;
    std::vector<BigInt> torsion;  // invariant factors > 1
    friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

std::string to_string(const HomologyGroup& h);

/// Homology of an integer chain complex given by boundary matrices
/// 1..max_degree (as from augment); degree n is computable for
/// n <= max_degree - 1.
std::vector<HomologyGroup> homology(const std::vector<IntMatrix>& boundaries, int max_degree);

} // namespace xcc

#endif
