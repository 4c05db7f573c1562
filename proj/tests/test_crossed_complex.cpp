#include <doctest.h>

#include "xcc/crossed_complex.hpp"
#include "xcc/io.hpp"
#include "xcc/morphism.hpp"
#include "xcc/pi_functor.hpp"

using namespace xcc;

namespace {

// free crossed module on <x | a, b> with delta a = x, delta b = 0:
// the two-relator complex of the classic non-injectivity example
CrsPtr example_R() {
    auto c = std::make_shared<FreeCrossedComplex>(2);
    int p = c->add_object("*");
    int x = c->add_edge("x", p, p);
    Letter xl = pos(x);
    c->add_generator(2, "a", p, c->word_element(Word::make(c->graph(), std::span<const Letter>(&xl, 1))));
    c->add_generator(2, "b", p, c->word_element(Word::identity(p)));
    std::vector<Word> relators;
    for (int g = 0; g < c->generator_count(2); ++g)
        relators.push_back(c->generator_boundary(2, g).word());
    c->set_normalizer(make_finite_enumeration_normalizer(c->graph(), relators, 1000));
    return c;
}

// free crossed module on <x | b> with delta b = 0; pi1 infinite cyclic,
// decided by the free normalizer
CrsPtr example_S() {
    auto c = std::make_shared<FreeCrossedComplex>(2);
    int p = c->add_object("*");
    c->add_edge("x", p, p);
    c->add_generator(2, "b", p, c->word_element(Word::identity(p)));
    c->set_normalizer(make_free_normalizer());
    return c;
}

Word wd(const FreeCrossedComplex& c, const std::string& s) { return parse_word(c.graph(), s); }

}  // namespace

TEST_CASE("boundary of dim-2 elements uses the crossed module rule") {
    CrsPtr c = example_R();
    Element a = c->generator_element(2, 0);
    CHECK(to_string(c->graph(), c->boundary(a).word()) == "x");
    // delta2 of a^x = -x + delta2(a) + x, reduced
    Element ax = c->act(a, wd(*c, "x"));
    CHECK(to_string(c->graph(), c->boundary(ax).word()) == "x");
    Element na = c->negate(a);
    CHECK(to_string(c->graph(), c->boundary(na).word()) == "- x");
    CHECK_THROWS_AS(c->boundary(c->edge_element(0)), Error);
}

TEST_CASE("action laws") {
    CrsPtr c = example_R();
    Element b = c->generator_element(2, 1);
    Word x = wd(*c, "x");
    CHECK(c->act(b, Word::identity(0)) == b);
    CHECK(c->act(c->act(b, x), invert(x)) == b);
    CHECK(c->act(b, compose(x, x)) == c->act(c->act(b, x), x));
}

TEST_CASE("the non-injectivity example: b^x = b in C(R) but not in C(S)") {
    CrsPtr R = example_R();
    Element bR = R->generator_element(2, 1);
    Element bRx = R->act(bR, wd(*R, "x"));
    CHECK(R->equal(bRx, bR));

    CrsPtr S = example_S();
    Element bS = S->generator_element(2, 0);
    Element bSx = S->act(bS, wd(*S, "x"));
    CHECK(!S->equal(bSx, bS));
}

TEST_CASE("equality is a congruence for add, act and boundary") {
    CrsPtr R = example_R();
    Element a = R->generator_element(2, 0), b = R->generator_element(2, 1);
    Element bx = R->act(b, wd(*R, "x"));
    REQUIRE(R->equal(bx, b));
    CHECK(R->equal(R->add(bx, a), R->add(b, a)));
    CHECK(R->equal(R->act(bx, wd(*R, "x")), R->act(b, wd(*R, "x"))));
    CHECK(R->equal(R->boundary(R->add(bx, a)), R->boundary(R->add(b, a))));
    CHECK_THROWS_AS((void)R->equal(a, R->edge_element(0)), Error);
}

TEST_CASE("dim >= 3 module elements collapse operators by the normalizer") {
    auto c = std::make_shared<FreeCrossedComplex>(3);
    int p = c->add_object("*");
    int x = c->add_edge("x", p, p);
    Letter xl = pos(x);
    c->add_generator(2, "a", p, c->word_element(Word::make(c->graph(), std::span<const Letter>(&xl, 1))));
    c->add_generator(2, "b", p, c->word_element(Word::identity(p)));
    std::vector<Word> relators = {c->generator_boundary(2, 0).word(),
                                  c->generator_boundary(2, 1).word()};
    c->set_normalizer(make_finite_enumeration_normalizer(c->graph(), relators, 1000));
    c->add_generator(3, "z", p, c->trivial(2, p));
    Element z = c->generator_element(3, 0);
    // x dies in pi1, so acting by the boundary image fixes dim-3 elements
    CHECK(c->act(z, wd(*c, "x")) == z);
    CHECK(c->add(z, c->negate(z)).is_empty());
    Element zx = c->module_element(3, {{0, wd(*c, "x"), 2}});
    CHECK(c->add(z, zx) == c->add(zx, z));
    CHECK(c->scale(z, 3).sum().begin()->second == 3);
}

TEST_CASE("dim-2 addition does not commute but the crossed module rule holds") {
    PiComplex pi = fundamental_crossed_complex(standard_simplex(2, 2));
    const FreeCrossedComplex& c = *pi.crs;
    int g1 = c.find_generator(2, "0,1,2");
    int g2 = c.find_generator(2, "1,2,2");
    REQUIRE(g1 >= 0);
    REQUIRE(g2 >= 0);
    REQUIRE(c.generator_endpoint(2, g1) == c.generator_endpoint(2, g2));
    Element u = c.generator_element(2, g1), v = c.generator_element(2, g2);
    Element comm = c.add(c.add(u, v), c.add(c.negate(u), c.negate(v)));
    CHECK(!c.boundary(comm).word().is_identity());  // noncommutativity witnessed by delta2

    // -y + x + y = x^{delta2 y}
    Element lhs = c.add(c.add(c.negate(v), u), v);
    Element rhs = c.act(u, c.boundary(v).word());
    CHECK(c.equal(lhs, rhs));
}

TEST_CASE("endpoint mismatches are rejected") {
    PiComplex pi = fundamental_crossed_complex(standard_simplex(2, 2));
    const FreeCrossedComplex& c = *pi.crs;
    int g = c.find_generator(2, "0,1,2");               // base point 2
    Word w01 = Word::generator(c.graph(), c.graph().find_edge("0,1"));  // starts at 0
    CHECK_THROWS_AS(c.act(c.generator_element(2, g), w01), Error);
    // operator must start at t(gen)
    CHECK_THROWS_AS(c.dim2_element({{+1, g, w01}}), Error);
    // additions need matching endpoints
    int h = c.find_generator(2, "0,0,1");  // base point 1
    REQUIRE(h >= 0);
    CHECK_THROWS_AS(c.add(c.generator_element(2, g), c.generator_element(2, h)), Error);
}

TEST_CASE("truncation of a complex keeps the lower structure") {
    PiComplex pi = fundamental_crossed_complex(standard_simplex(2, 3));
    CrsPtr t = truncate(pi.crs, 2);
    CHECK(t->trunc_level() == 2);
    CHECK(t->generator_count(2) == pi.crs->generator_count(2));
    CHECK(t->generator_count(3) == 0);
    CHECK(audit_cc1(*t).empty());
    CHECK_THROWS_AS(truncate(t, 3), Error);
}

TEST_CASE("boundary images of dimension 3 are central in dimension 2") {
    PiComplex pi = fundamental_crossed_complex(standard_simplex(3, 3));
    const FreeCrossedComplex& c = *pi.crs;
    // delta3 z + w = w + delta3 z for every dim-3 generator z and any
    // dim-2 element w at the same base point
    for (int z = 0; z < c.generator_count(3); ++z) {
        int ep = c.generator_endpoint(3, z);
        Element dz = c.generator_boundary(3, z);
        for (int g = 0; g < c.generator_count(2); ++g) {
            if (c.generator_endpoint(2, g) != ep) continue;
            Element w = c.generator_element(2, g);
            CHECK(c.equal(c.add(dz, w), c.add(w, dz)));
            break;  // one witness per z keeps this quick
        }
    }
}

TEST_CASE("morphism build validates the geometric conditions") {
    CrsPtr R = example_R();
    Morphism id = identity_morphism(R);
    CHECK(build_morphism(R, R, id.on_object, id.on_edge, id.on_gen, 2).ok());
    auto bad = id.on_gen;
    bad[0][0] = R->generator_element(2, 1);  // a -> b breaks delta f = f delta
    MorphismBuildReport rep = build_morphism(R, R, id.on_object, id.on_edge, bad, 2);
    CHECK(!rep.ok());
    CHECK(rep.violations.front().find("dfx != fdx") != std::string::npos);
}

TEST_CASE("apply_morphism commutes with structure") {
    CrsPtr R = example_R();
    // endomorphism: x -> x, a -> a, b -> b^x  (valid since delta b = 0)
    Morphism id = identity_morphism(R);
    auto table = id.on_gen;
    table[0][1] = R->act(R->generator_element(2, 1), wd(*R, "x"));
    Morphism f = make_morphism(R, R, id.on_object, id.on_edge, table, 2);
    Element mix = R->add(R->generator_element(2, 0), R->negate(R->generator_element(2, 1)));
    CHECK(R->equal(R->boundary(f(mix)), f(R->boundary(mix))));
    Morphism ff = compose_morphisms(f, f);
    CHECK(R->equal(ff(mix), f(f(mix))));
}

TEST_CASE("kill_basis quotients and rejects non-normal structures") {
    auto c = std::make_shared<FreeCrossedComplex>(2);
    int p = c->add_object("*");
    int x = c->add_edge("x", p, p);
    int y = c->add_edge("y", p, p);
    Letter xl = pos(x);
    c->add_generator(2, "a", p, c->word_element(Word::make(c->graph(), std::span<const Letter>(&xl, 1))));
    std::vector<Word> rel = {c->generator_boundary(2, 0).word()};
    c->set_normalizer(make_finite_enumeration_normalizer(c->graph(), rel, 1000));
    CrsPtr C = c;

    GradedGenSet none;
    none.gens.resize(1);
    KillResult id_kill = kill_basis(C, none);
    CHECK(id_kill.quotient->edge_count() == 2);
    CHECK(id_kill.quotient->generator_count(2) == 1);

    GradedGenSet bad;
    bad.gens.resize(1);
    bad.gens[0].push_back(0);  // kill a but not x
    CHECK_THROWS_WITH_AS(kill_basis(C, bad), doctest::Contains("normal structure"), Error);

    GradedGenSet good;
    good.edges.push_back(x);
    good.gens.resize(1);
    good.gens[0].push_back(0);
    KillResult k = kill_basis(C, good);
    CHECK(k.quotient->edge_count() == 1);
    CHECK(k.quotient->generator_count(2) == 0);
    CHECK(k.edge_map[x] == -1);
    CHECK(k.edge_map[y] == 0);
    CHECK(k.projection.on_edge[x].is_identity());
    CHECK(!k.projection.on_edge[y].is_identity());
}

TEST_CASE("element grammar round trip") {
    CrsPtr R = example_R();
    Element e = R->add(R->generator_element(2, 0),
                       R->negate(R->act(R->generator_element(2, 1), wd(*R, "x"))));
    std::string s = element_to_string(*R, e);
    CHECK(s == "a - b^[x]");
    CHECK(parse_element(*R, 2, s) == e);
    CHECK(parse_element(*R, 1, "- x + x").word().is_identity());
    CHECK(element_to_string(*R, R->trivial(2, 0)) == "0_*");
    CHECK(parse_element(*R, 2, "0_*").is_empty());
}

TEST_CASE("crossed complex document round trip") {
    CrsPtr R = example_R();
    std::string doc = serialize(*R);
    CrsPtr back = parse_crossed_complex_doc(doc);
    CHECK(back->object_count() == 1);
    CHECK(back->edge_count() == 1);
    CHECK(back->generator_count(2) == 2);
    CHECK(back->normalizer()->kind() == "finite_enumeration");
    CHECK(serialize(*back) == doc);
    // equality semantics survive the round trip
    Element b = back->generator_element(2, 1);
    CHECK(back->equal(back->act(b, wd(*back, "x")), b));
}
