#include <doctest.h>

#include "xcc/io.hpp"
#include "xcc/simplicial_set.hpp"

using namespace xcc;

namespace {

// independent brute-force count of nondecreasing sequences of length
// len over 0..n (optionally omitting at least one value)
long long count_monotone(int n, int len, bool omit_one) {
    long long total = 0;
    std::vector<int> cur(len);
    auto rec = [&](auto&& self, int pos, int min) -> void {
        if (pos == len) {
            if (omit_one) {
                std::vector<bool> hit(n + 1, false);
                for (int v : cur) hit[v] = true;
                bool all = true;
                for (bool b : hit) all = all && b;
                if (all) return;
            }
            ++total;
            return;
        }
        for (int v = min; v <= n; ++v) {
            cur[pos] = v;
            self(self, pos + 1, v);
        }
    };
    rec(rec, 0, 0);
    return total;
}

int nondegenerate_count(const SimplicialSet& K, int dim) {
    int c = 0;
    for (int i = 0; i < K.count(dim); ++i)
        if (!K.is_degenerate(dim, i)) ++c;
    return c;
}

}  // namespace

TEST_CASE("standard simplex counts and faces") {
    SimplicialSet K = standard_simplex(2, 2);
    CHECK(K.count(0) == 3);
    CHECK(K.count(1) == 6);
    CHECK(K.count(2) == 10);
    CHECK(nondegenerate_count(K, 1) == 3);
    CHECK(nondegenerate_count(K, 2) == 1);
    for (int m = 0; m <= 2; ++m) CHECK(K.count(m) == count_monotone(2, m + 1, false));

    int top = K.find(2, "0,1,2");
    REQUIRE(top >= 0);
    CHECK(K.name(1, K.face(2, top, 1)) == "0,2");
    CHECK(K.name(1, K.face(2, top, 0)) == "1,2");
    CHECK(K.name(1, K.face(2, top, 2)) == "0,1");
    CHECK(validate(K).ok());
}

TEST_CASE("standard simplex of a point") {
    SimplicialSet K = standard_simplex(0, 3);
    for (int m = 0; m <= 3; ++m) CHECK(K.count(m) == 1);
    for (int m = 1; m <= 3; ++m) CHECK(nondegenerate_count(K, m) == 0);
    CHECK(validate(K).ok());
    CHECK_THROWS_AS(standard_simplex(-1, 0), Error);
    CHECK_THROWS_AS(standard_simplex(2, 1), Error);
}

TEST_CASE("boundary simplex") {
    SimplicialSet K = boundary_simplex(1, 1);
    CHECK(K.count(0) == 2);
    CHECK(K.count(1) == 2);  // only the two degenerate edges
    CHECK(nondegenerate_count(K, 1) == 0);
    CHECK(validate(K).ok());

    SimplicialSet B3 = boundary_simplex(3, 3);
    CHECK(nondegenerate_count(B3, 2) == 4);
    CHECK(nondegenerate_count(B3, 3) == 0);
    CHECK(validate(B3).ok());

    // subobject of the standard simplex
    SimplicialSet D3 = standard_simplex(3, 3);
    for (int m = 0; m <= 3; ++m)
        for (int i = 0; i < B3.count(m); ++i) CHECK(D3.find(m, B3.name(m, i)) >= 0);
}

TEST_CASE("nerve of a group") {
    SimplicialSet K = nerve_of_group(cyclic_group_table(2), 3);
    for (int m = 0; m <= 3; ++m) {
        CHECK(K.count(m) == 1 << m);
        CHECK(nondegenerate_count(K, m) == 1);
    }
    CHECK(validate(K).ok());
    // d1 (g,h) = gh
    int gh = K.find(2, "[g1|g1]");
    REQUIRE(gh >= 0);
    CHECK(K.name(1, K.face(2, gh, 1)) == "[1]");
    CHECK(K.name(1, K.face(2, gh, 0)) == "[g1]");
    CHECK(K.name(1, K.face(2, gh, 2)) == "[g1]");

    SimplicialSet T = nerve_of_group(trivial_group_table(), 4);
    for (int m = 0; m <= 4; ++m) CHECK(T.count(m) == 1);
    CHECK(validate(T).ok());
}

TEST_CASE("nerve rejects non-groups naming the axiom") {
    GroupTable t;  // left-zero semigroup: not a group
    t.names = {"x", "y"};
    t.mul = {{0, 0}, {1, 1}};
    CHECK_THROWS_WITH_AS(nerve_of_group(t, 2), doctest::Contains("identity"), Error);
    GroupTable assoc;  // magma failing associativity, with identity
    assoc.names = {"1", "a", "b"};
    assoc.mul = {{0, 1, 2}, {1, 2, 2}, {2, 2, 1}};
    CHECK_THROWS_WITH_AS(nerve_of_group(assoc, 2), doctest::Contains("associativity"), Error);
}

TEST_CASE("validate reports broken identities") {
    SimplicialSet K(1);
    int v = K.add_simplex(0, "v");
    int w = K.add_simplex(0, "w");
    int e = K.add_simplex(1, "e");
    int f = K.add_simplex(1, "f");
    K.set_face(1, e, 0, v);
    K.set_face(1, e, 1, v);
    K.set_face(1, f, 0, w);
    K.set_face(1, f, 1, w);
    K.set_degeneracy(0, v, 0, f);  // wrong: d0 e0(v) = w != v
    K.set_degeneracy(0, w, 0, f);
    ValidationReport rep = validate(K);
    CHECK(!rep.ok());
    bool found = false;
    for (const auto& i : rep.issues) found = found || i.rule == "d_j e_j = id";
    CHECK(found);
}

TEST_CASE("codec round trip") {
    for (const SimplicialSet& K :
         {standard_simplex(2, 3), boundary_simplex(2, 3), nerve_of_group(cyclic_group_table(2), 3)}) {
        std::string doc = serialize(K);
        SimplicialSet back = parse_simplicial_set_doc(doc);
        CHECK(back == K);
        CHECK(serialize(back) == doc);
    }
}

TEST_CASE("codec parse errors carry context") {
    SimplicialSet K = standard_simplex(1, 1);
    std::string doc = serialize(K);
    // remove a face entry by renaming its key
    std::string broken = doc;
    auto fpos = broken.find("\"faces\"");
    auto pos = broken.find("\"0,1\":", fpos);
    REQUIRE(pos != std::string::npos);
    broken.replace(pos, 6, "\"0x1\":");
    CHECK_THROWS_WITH_AS(parse_simplicial_set_doc(broken), doctest::Contains("0,1"), ParseError);

    // face pointing at a wrong-dimension simplex
    std::string wrong = doc;
    auto epos = wrong.find("\"0,1\":", wrong.find("\"faces\""));
    REQUIRE(epos != std::string::npos);
    auto vstart = wrong.find('[', epos);
    auto vend = wrong.find(']', vstart);
    wrong.replace(vstart, vend - vstart + 1, "[\"0,1\", \"0\"]");
    CHECK_THROWS_WITH_AS(parse_simplicial_set_doc(wrong), doctest::Contains("dimension"), ParseError);
}

TEST_CASE("truncation of a simplicial set") {
    SimplicialSet K = standard_simplex(2, 3);
    SimplicialSet t = truncate(K, 2);
    CHECK(t == standard_simplex(2, 2));
    CHECK_THROWS_AS(truncate(K, 4), Error);
}

TEST_CASE("degenerate completion extends by the forced level") {
    SimplicialSet K = standard_simplex(2, 2);
    SimplicialSet Kc = degenerate_completion(K);
    CHECK(Kc.trunc_level() == 3);
    CHECK(validate(Kc).ok());
    CHECK(nondegenerate_count(Kc, 3) == 0);
    SimplicialSet D3 = standard_simplex(2, 3);
    CHECK(Kc.count(3) == D3.count(3));

    SimplicialSet N = nerve_of_group(cyclic_group_table(2), 2);
    SimplicialSet Nc = degenerate_completion(N);
    CHECK(validate(Nc).ok());
    SimplicialSet N3 = nerve_of_group(cyclic_group_table(2), 3);
    CHECK(Nc.count(3) == N3.count(3) - 1);  // all but the nondegenerate tuple
}
