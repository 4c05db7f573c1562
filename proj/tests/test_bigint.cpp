#include <doctest.h>

#include <random>

#include "xcc/bigint.hpp"

using xcc::BigInt;

TEST_CASE("bigint small arithmetic") {
    CHECK(BigInt(0).is_zero());
    CHECK((BigInt(2) + BigInt(3)).to_ll() == 5);
    CHECK((BigInt(2) - BigInt(3)).to_ll() == -1);
    CHECK((BigInt(-7) * BigInt(6)).to_ll() == -42);
    CHECK((BigInt(7) / BigInt(2)).to_ll() == 3);
    CHECK((BigInt(-7) / BigInt(2)).to_ll() == -3);   // truncation toward zero
    CHECK((BigInt(-7) % BigInt(2)).to_ll() == -1);   // remainder keeps dividend sign
    CHECK(gcd(BigInt(12), BigInt(-18)).to_ll() == 6);
    CHECK(BigInt(5) < BigInt(7));
    CHECK(BigInt(-5) > BigInt(-7));
}

TEST_CASE("bigint string round trip across limb boundaries") {
    const char* cases[] = {"0", "1", "-1", "999999999", "1000000000", "-123456789012345678901234567890"};
    for (const char* s : cases) CHECK(BigInt::from_string(s).to_string() == s);
}

TEST_CASE("bigint randomized cross-check against __int128") {
    std::mt19937_64 rng(12345);
    auto to_big = [](__int128 v) {
        bool neg = v < 0;
        unsigned __int128 m = neg ? -static_cast<unsigned __int128>(v) : v;
        std::string s;
        if (m == 0) s = "0";
        while (m > 0) {
            s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(m % 10)));
            m /= 10;
        }
        return BigInt::from_string((neg ? "-" : "") + s);
    };
    for (int it = 0; it < 2000; ++it) {
        long long a = static_cast<long long>(rng()) % 1000000000000LL;
        long long b = static_cast<long long>(rng()) % 1000000000000LL;
        BigInt A(a), B(b);
        CHECK(A + B == to_big(static_cast<__int128>(a) + b));
        CHECK(A - B == to_big(static_cast<__int128>(a) - b));
        CHECK(A * B == to_big(static_cast<__int128>(a) * b));
        if (b != 0) {
            __int128 q = static_cast<__int128>(a) / b, r = static_cast<__int128>(a) % b;
            CHECK(A / B == to_big(q));
            CHECK(A % B == to_big(r));
        }
    }
}

TEST_CASE("bigint multi-limb division") {
    BigInt a = BigInt::from_string("123456789012345678901234567890123456789");
    BigInt b = BigInt::from_string("987654321098765432109");
    BigInt q = a / b, r = a % b;
    CHECK(q * b + r == a);
    CHECK(r.abs() < b.abs());
    CHECK(r.sign() >= 0);
}
