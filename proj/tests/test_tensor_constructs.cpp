#include <doctest.h>

#include "xcc/pi_functor.hpp"
#include "xcc/tensor_constructs.hpp"

using namespace xcc;

namespace {

CrsPtr point_complex() {
    auto c = std::make_shared<FreeCrossedComplex>(0);
    c->add_object("p");
    c->set_normalizer(make_simply_connected_normalizer(c->graph()));
    return c;
}

}  // namespace

TEST_CASE("cone over a point is the interval") {
    ConeResult cr = cone(point_complex());
    CHECK(cr.cone->object_count() == 2);
    CHECK(cr.cone->edge_count() == 1);
}

TEST_CASE("cone boundary rules and basis counts") {
    PiComplex pi = fundamental_crossed_complex(standard_simplex(2, 2));
    ConeResult cr = cone(pi.crs);
    const FreeCrossedComplex& C = *cr.cone;
    const FreeCrossedComplex& B = *pi.crs;

    // |Cone(F)_n| = |F_n| + |F_{n-1}| (+1 object in dimension 0)
    CHECK(C.object_count() == B.object_count() + 1);
    CHECK(C.edge_count() == B.edge_count() + B.object_count());
    CHECK(C.generator_count(2) == B.generator_count(2) + B.edge_count());
    CHECK(C.generator_count(3) == B.generator_count(2));

    // dim-1 generator r: delta2(i&r) = -i&sr + 0&r + i&tr
    int e = 0;
    Word w = C.generator_boundary(2, cr.iota_edge[e]).word();
    std::vector<Letter> expect = {neg(cr.iota_obj[B.graph().src(e)]), pos(cr.edge0[e]),
                                  pos(cr.iota_obj[B.graph().tgt(e)])};
    CHECK(w == Word::make(C.graph(), expect));

    // dim >= 2: delta(i&r) = -(i&delta r) + (0&r)^{i&tr}
    int g = B.find_generator(2, "0,1,2");
    const Element& b = C.generator_boundary(3, cr.iota_gen[0][g]);
    Element rhs = C.add(C.negate(cr.iota_of(B.generator_boundary(2, g))),
                        C.act(C.generator_element(2, cr.gen0[0][g]),
                              Word::generator(C.graph(), cr.iota_obj[B.generator_endpoint(2, g)])));
    CHECK(C.equal(b, rhs));

    // operators vanish under i&- in dims >= 2
    Element x = B.generator_element(2, g);
    Element acted = B.act(x, Word::identity(B.generator_endpoint(2, g)));
    CHECK(cr.iota_of(acted) == cr.iota_of(x));

    CHECK(audit_cc1(C).empty());
    CHECK(build_morphism(pi.crs, cr.cone, cr.embed.on_object, cr.embed.on_edge, cr.embed.on_gen,
                         2).ok());
}

TEST_CASE("cone of a complex with dim-3 generators") {
    PiComplex pi = fundamental_crossed_complex(standard_simplex(2, 3));
    ConeResult cr = cone(pi.crs);
    CHECK(audit_cc1(*cr.cone).empty());
    CHECK(cr.cone->generator_count(4) == pi.crs->generator_count(3));
}

TEST_CASE("cylinder boundary rows") {
    PiComplex pi = fundamental_crossed_complex(standard_simplex(2, 2));
    CylinderResult cy = cylinder(pi.crs);
    const FreeCrossedComplex& C = *cy.cylinder;
    const FreeCrossedComplex& B = *pi.crs;

    // delta(0&r) = 0&delta r for dim-2 r
    int g = B.find_generator(2, "0,1,2");
    Word w0 = C.generator_boundary(2, cy.gen_end[0][0][g]).word();
    Word expect = cy.end0.word(B.generator_boundary(2, g).word());
    CHECK(w0 == expect);

    // delta(i&r), r dim 1: -1&r - i&sr + 0&r + i&tr
    int e = B.graph().find_edge("0,1");
    Word w = C.generator_boundary(2, cy.iota_edge[e]).word();
    std::vector<Letter> ls = {neg(cy.edge_end[1][e]), neg(cy.iota_obj[B.graph().src(e)]),
                              pos(cy.edge_end[0][e]), pos(cy.iota_obj[B.graph().tgt(e)])};
    CHECK(w == Word::make(C.graph(), ls));

    // dim >= 2 row: delta(i&r) = -(i&delta r) - 1&r + (0&r)^{i&tr}
    Element lhs = C.generator_boundary(3, cy.iota_gen[0][g]);
    Element rhs = C.add(
        C.add(C.negate(cy.iota_of(B.generator_boundary(2, g))),
              C.negate(C.generator_element(2, cy.gen_end[1][0][g]))),
        C.act(C.generator_element(2, cy.gen_end[0][0][g]),
              Word::generator(C.graph(), cy.iota_obj[B.generator_endpoint(2, g)])));
    CHECK(C.equal(lhs, rhs));

    // both ends are morphisms
    CHECK(build_morphism(pi.crs, cy.cylinder, cy.end0.on_object, cy.end0.on_edge, cy.end0.on_gen,
                         cy.end0.defined_through).ok());
    CHECK(build_morphism(pi.crs, cy.cylinder, cy.end1.on_object, cy.end1.on_edge, cy.end1.on_gen,
                         cy.end1.defined_through).ok());
    CHECK(audit_cc1(C).empty());
}

TEST_CASE("cylinder i& is a derivation along the 1 end") {
    PiComplex pi = fundamental_crossed_complex(standard_simplex(2, 2));
    CylinderResult cy = cylinder(pi.crs);
    const FreeCrossedComplex& C = *cy.cylinder;
    const Graph& bg = pi.crs->graph();
    Word u = Word::generator(bg, bg.find_edge("0,1"));
    Word v = Word::generator(bg, bg.find_edge("1,2"));
    // i&(u+v) = (i&u)^{1&v} + i&v
    Element lhs = cy.iota_of(pi.crs->word_element(compose(u, v)));
    Element rhs = C.add(C.act(cy.iota_of(pi.crs->word_element(u)), cy.end1.word(v)),
                        cy.iota_of(pi.crs->word_element(v)));
    CHECK(C.equal(lhs, rhs));
    // i&(-u) = -(i&u)^{1&(-u)}
    Element li = cy.iota_of(pi.crs->word_element(invert(u)));
    Element ri = C.negate(C.act(cy.iota_of(pi.crs->word_element(u)), cy.end1.word(invert(u))));
    CHECK(C.equal(li, ri));
}

TEST_CASE("algebraic simplex structure") {
    auto chain = algebraic_simplex(3);
    CHECK(chain.size() == 4);

    // aDelta^1 is the interval
    CHECK(chain[1].complex->object_count() == 2);
    CHECK(chain[1].complex->edge_count() == 1);

    // aDelta^2: 3 objects, 3 edges, 1 two-cell
    CHECK(chain[2].complex->object_count() == 3);
    CHECK(chain[2].complex->edge_count() == 3);
    CHECK(chain[2].complex->generator_count(2) == 1);

    // vertices ordered with the cone vertex last
    CHECK(chain[3].vertices.size() == 4);
    CHECK(chain[3].vertices.back() == chain[3].complex->object_count() - 1);
    CHECK(chain[3].complex->generator_count(3) == 1);
    CHECK(audit_cc1(*chain[3].complex).empty());
}

TEST_CASE("hal consistency for dimensions 2 to 5") {
    HalReport rep = hal_consistency_check(5);
    CHECK(rep.checks.size() == 4);
    for (const auto& c : rep.checks) {
        INFO("n = ", c.n, " ", c.detail);
        CHECK(c.direct_ok);
        CHECK(c.inductive_ok);
    }
    CHECK(rep.ok());
}
