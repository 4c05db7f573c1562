#ifndef XCC_TENSOR_CONSTRUCTS_HPP
#define XCC_TENSOR_CONSTRUCTS_HPP

#include "xcc/morphism.hpp"

namespace xcc {

/// Cone on a free crossed complex: one new vertex v, generators 0&x (the
/// base copy) and i&x (one dimension up), boundaries per the cone rules.
/// Cones are simply connected, so the attached normalizer collapses
/// parallel words.
struct ConeResult {
    CrsPtr base;
    CrsPtr cone;
    Morphism embed;  // 0 & - : base -> cone
    int vertex;
    std::vector<int> obj0;                  // 0&p object ids
    std::vector<int> edge0;                 // 0&e edge ids
    std::vector<std::vector<int>> gen0;     // [dim-2] 0&r
    std::vector<int> iota_obj;              // i&p edge ids (0&p -> v)
    std::vector<int> iota_edge;             // i&e dim-2 generator ids
    std::vector<std::vector<int>> iota_gen; // [dim-2] i&r at dim+1

    /// The cone extension i & - over elements of the base (dim >= 1):
    /// additive, kills operators in dims >= 2.
    Element iota_of(const Element& e) const;
};

ConeResult cone(const CrsPtr& base);

/// Cylinder I (x) C with both end morphisms. The normalizer is selected
/// from the cylinder's own presentation.
struct CylinderResult {
    CrsPtr base;
    CrsPtr cylinder;
    Morphism end0, end1;
    std::vector<std::vector<int>> obj_end;   // [side][p]
    std::vector<std::vector<int>> edge_end;  // [side][e]
    std::vector<std::vector<std::vector<int>>> gen_end;  // [side][dim-2][g]
    std::vector<int> iota_obj;
    std::vector<int> iota_edge;
    std::vector<std::vector<int>> iota_gen;

    /// i & - over base elements: the derivation along 1&- in dimension 1,
    /// the 1&- operator morphism in dimensions >= 2.
    Element iota_of(const Element& e) const;
};

CylinderResult cylinder(const CrsPtr& base, std::size_t budget = kDefaultEnumerationBudget);

/// Iterated cone a-simplex: aDelta^0 is a point, aDelta^n = Cone(aDelta^{n-1}).
/// sigma^n is the top generator i&sigma^{n-1}; faces follow
/// d_i sigma^n = i&d_i sigma^{n-1} (i < n) and 0&sigma^{n-1} (i = n).
struct AlgebraicSimplex {
    int n = 0;
    CrsPtr complex;
    std::vector<int> vertices;   // v_0..v_n, v_n the cone vertex
    std::vector<int> u_edges;    // u_k = i&v_{k-1}, k = 1..n (embedded upward)
    int sigma = 0;               // object id (n=0), edge id (n=1), generator id (n>=2)
    std::vector<int> faces;      // d_i sigma^n ids in dimension n-1 (n >= 1)
};

/// Builds aDelta^0..aDelta^n; element k of the result is aDelta^k.
std::vector<AlgebraicSimplex> algebraic_simplex(int n);

struct HalCheck {
    int n;
    bool direct_ok;     // cone-computed boundary equals the HAL formula
    bool inductive_ok;  // delta sigma^{n} = (0&sigma^{n-1})^{i&v_{n-1}} - i&delta sigma^{n-1}
    std::string detail;
};

struct HalReport {
    std::vector<HalCheck> checks;
    bool ok() const {
        for (const auto& c : checks)
            if (!c.direct_ok || !c.inductive_ok) return false;
        return true;
    }
};

/// Machine verification that the cone calculus reproduces the homotopy
/// addition formulae for 2 <= n <= max_dim.
HalReport hal_consistency_check(int max_dim);

} // namespace xcc

#endif
