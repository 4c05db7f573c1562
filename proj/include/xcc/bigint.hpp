#ifndef XCC_BIGINT_HPP
#define XCC_BIGINT_HPP

#include <cstdint>
#include <compare>
#include <string>
#include <vector>

namespace xcc {

/// Signed arbitrary-precision integer, base 10^9 limbs, little-endian.
/// Only the operations needed for exact Smith normal form reduction are
/// provided: ring arithmetic, truncated division, gcd, comparisons.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);

    static BigInt from_string(const std::string& s);

    bool is_zero() const { return limbs_.empty(); }
    int sign() const { return limbs_.empty() ? 0 : sign_; }
    bool is_one() const { return sign_ == 1 && limbs_.size() == 1 && limbs_[0] == 1; }

    BigInt operator-() const;
    BigInt abs() const;

    BigInt& operator+=(const BigInt& o);
    BigInt& operator-=(const BigInt& o);
    BigInt& operator*=(const BigInt& o);

    friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
    friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
    friend BigInt operator*(BigInt a, const BigInt& b) { return a *= b; }

    /// Truncated division (C semantics): quotient rounds toward zero,
    /// remainder has the sign of the dividend. Throws on zero divisor.
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
    friend BigInt operator/(const BigInt& a, const BigInt& b);
    friend BigInt operator%(const BigInt& a, const BigInt& b);

    friend bool operator==(const BigInt& a, const BigInt& b);
    friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b);

    std::string to_string() const;

    /// Value as long long; throws if out of range.
    long long to_ll() const;

    friend BigInt gcd(BigInt a, BigInt b);

private:
    static constexpr uint32_t kBase = 1000000000u;
    int sign_ = 1;                  // meaningful only when limbs_ nonempty
    std::vector<uint32_t> limbs_;   // no trailing zero limbs

    void trim();
    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    // requires |a| >= |b|
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static void divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                           std::vector<uint32_t>& q, std::vector<uint32_t>& r);
};

} // namespace xcc

#endif
