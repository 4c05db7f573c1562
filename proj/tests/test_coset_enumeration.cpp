#include <doctest.h>

#include "xcc/coset_enumeration.hpp"

using namespace xcc;

namespace {

std::vector<Letter> rel(std::initializer_list<int> signed_gens) {
    // 1-based signed generator ids, matching the Letter convention
    return std::vector<Letter>(signed_gens);
}

}  // namespace

TEST_CASE("trivial and cyclic groups") {
    EnumeratedGroup t = enumerate_group(1, {rel({1})}, 100);
    CHECK(t.order == 1);

    EnumeratedGroup z2 = enumerate_group(1, {rel({1, 1})}, 100);
    CHECK(z2.order == 2);
    int g = z2.apply(z2.identity(), 1);
    CHECK(g != z2.identity());
    CHECK(z2.apply(g, 1) == z2.identity());

    EnumeratedGroup z6 = enumerate_group(1, {rel({1, 1, 1, 1, 1, 1})}, 100);
    CHECK(z6.order == 6);
}

TEST_CASE("free group exceeds any budget") {
    CHECK_THROWS_AS(enumerate_group(1, {}, 50), CapacityError);
}

TEST_CASE("s3 from a standard presentation") {
    // <a, b | a^2, b^2, (ab)^3>
    std::vector<std::vector<Letter>> rels = {rel({1, 1}), rel({2, 2}), rel({1, 2, 1, 2, 1, 2})};
    EnumeratedGroup s3 = enumerate_group(2, rels, 1000);
    CHECK(s3.order == 6);
    // relators act trivially on every element
    for (int e = 0; e < s3.order; ++e)
        for (const auto& r : rels) CHECK(s3.apply_word(e, r) == e);
    // canonical representatives reproduce their elements
    for (int e = 0; e < s3.order; ++e) CHECK(s3.apply_word(s3.identity(), s3.rep[e]) == e);
}

TEST_CASE("quaternion group of order 8") {
    // <a, b | a^4, a^2 b^-2, b^-1 a b a>
    std::vector<std::vector<Letter>> rels = {rel({1, 1, 1, 1}), rel({1, 1, -2, -2}),
                                             rel({-2, 1, 2, 1})};
    EnumeratedGroup q8 = enumerate_group(2, rels, 1000);
    CHECK(q8.order == 8);
}

TEST_CASE("coincidence-heavy presentation collapses") {
    // <a, b | a, b a^-1> is trivial
    EnumeratedGroup g = enumerate_group(2, {rel({1}), rel({2, -1})}, 100);
    CHECK(g.order == 1);
}
