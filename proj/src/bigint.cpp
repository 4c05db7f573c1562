#include "xcc/bigint.hpp"

#include <stdexcept>

namespace xcc {

BigInt::BigInt(long long v) {
    if (v == 0) return;
    sign_ = v > 0 ? 1 : -1;
    unsigned long long m = v > 0 ? static_cast<unsigned long long>(v)
                                 : 0ull - static_cast<unsigned long long>(v);
    while (m > 0) {
        limbs_.push_back(static_cast<uint32_t>(m % kBase));
        m /= kBase;
    }
}

BigInt BigInt::from_string(const std::string& s) {
    BigInt out;
    size_t i = 0;
    int sign = 1;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        if (s[i] == '-') sign = -1;
        ++i;
    }
    if (i == s.size()) throw std::invalid_argument("BigInt: empty numeral");
    for (size_t j = i; j < s.size(); ++j)
        if (s[j] < '0' || s[j] > '9') throw std::invalid_argument("BigInt: bad digit");
    // parse in base-10^9 chunks from the right
    size_t end = s.size();
    while (end > i) {
        size_t begin = end >= i + 9 ? end - 9 : i;
        out.limbs_.push_back(static_cast<uint32_t>(std::stoul(s.substr(begin, end - begin))));
        end = begin;
    }
    // chunks were appended least-significant-first only if we walk right to left;
    // the loop above does exactly that, but each chunk is already positional: fix order.
    // (limbs_ currently holds chunks from least significant upward: correct.)
    out.sign_ = sign;
    out.trim();
    return out;
}

void BigInt::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) sign_ = 1;
}

int BigInt::cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

std::vector<uint32_t> BigInt::add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    std::vector<uint32_t> r;
    r.reserve(std::max(a.size(), b.size()) + 1);
    uint32_t carry = 0;
    for (size_t i = 0; i < a.size() || i < b.size() || carry; ++i) {
        uint64_t s = carry;
        if (i < a.size()) s += a[i];
        if (i < b.size()) s += b[i];
        r.push_back(static_cast<uint32_t>(s % kBase));
        carry = static_cast<uint32_t>(s / kBase);
    }
    return r;
}

std::vector<uint32_t> BigInt::sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    std::vector<uint32_t> r = a;
    int64_t borrow = 0;
    for (size_t i = 0; i < r.size(); ++i) {
        int64_t v = static_cast<int64_t>(r[i]) - borrow - (i < b.size() ? b[i] : 0);
        if (v < 0) {
            v += kBase;
            borrow = 1;
        } else {
            borrow = 0;
        }
        r[i] = static_cast<uint32_t>(v);
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<uint32_t> BigInt::mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<uint64_t> acc(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        uint64_t carry = 0;
        for (size_t j = 0; j < b.size(); ++j) {
            uint64_t cur = acc[i + j] + static_cast<uint64_t>(a[i]) * b[j] + carry;
            acc[i + j] = cur % kBase;
            carry = cur / kBase;
        }
        size_t k = i + b.size();
        while (carry) {
            uint64_t cur = acc[k] + carry;
            acc[k] = cur % kBase;
            carry = cur / kBase;
            ++k;
        }
    }
    std::vector<uint32_t> r(acc.size());
    for (size_t i = 0; i < acc.size(); ++i) r[i] = static_cast<uint32_t>(acc[i]);
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

// Schoolbook long division, quotient digit found by binary search on a
// single base-10^9 digit (candidates fit in uint32, check via mul+cmp
// against the running remainder head). Adequate for the matrix sizes here.
void BigInt::divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                        std::vector<uint32_t>& q, std::vector<uint32_t>& r) {
    q.assign(a.size(), 0);
    r.clear();
    for (size_t i = a.size(); i-- > 0;) {
        // r = r * base + a[i]
        r.insert(r.begin(), a[i]);
        while (!r.empty() && r.back() == 0) r.pop_back();
        if (cmp_mag(r, b) < 0) continue;
        uint32_t lo = 1, hi = kBase - 1, digit = 1;
        while (lo <= hi) {
            uint32_t mid = lo + (hi - lo) / 2;
            std::vector<uint32_t> t = mul_mag(b, {mid});
            if (cmp_mag(t, r) <= 0) {
                digit = mid;
                lo = mid + 1;
            } else {
                if (mid == 0) break;
                hi = mid - 1;
            }
        }
        q[i] = digit;
        r = sub_mag(r, mul_mag(b, {digit}));
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    if (!r.limbs_.empty()) r.sign_ = -r.sign_;
    return r;
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    r.sign_ = 1;
    return r;
}

BigInt& BigInt::operator+=(const BigInt& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (sign_ == o.sign_) {
        limbs_ = add_mag(limbs_, o.limbs_);
    } else {
        int c = cmp_mag(limbs_, o.limbs_);
        if (c == 0) {
            limbs_.clear();
            sign_ = 1;
        } else if (c > 0) {
            limbs_ = sub_mag(limbs_, o.limbs_);
        } else {
            limbs_ = sub_mag(o.limbs_, limbs_);
            sign_ = o.sign_;
        }
    }
    return *this;
}

BigInt& BigInt::operator-=(const BigInt& o) { return *this += -o; }

BigInt& BigInt::operator*=(const BigInt& o) {
    if (is_zero() || o.is_zero()) {
        limbs_.clear();
        sign_ = 1;
        return *this;
    }
    limbs_ = mul_mag(limbs_, o.limbs_);
    sign_ = sign_ * o.sign_;
    return *this;
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    if (b.is_zero()) throw std::domain_error("BigInt: division by zero");
    std::vector<uint32_t> qm, rm;
    divmod_mag(a.limbs_, b.limbs_, qm, rm);
    q.limbs_ = std::move(qm);
    r.limbs_ = std::move(rm);
    q.sign_ = a.sign_ * b.sign_;
    r.sign_ = a.sign_;
    q.trim();
    r.trim();
}

BigInt operator/(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    return q;
}

BigInt operator%(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    return r;
}

bool operator==(const BigInt& a, const BigInt& b) {
    return a.limbs_ == b.limbs_ && (a.limbs_.empty() || a.sign_ == b.sign_);
}

std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
    int sa = a.sign(), sb = b.sign();
    if (sa != sb) return sa <=> sb;
    int c = BigInt::cmp_mag(a.limbs_, b.limbs_);
    if (sa < 0) c = -c;
    return c <=> 0;
}

std::string BigInt::to_string() const {
    if (limbs_.empty()) return "0";
    std::string s = sign_ < 0 ? "-" : "";
    s += std::to_string(limbs_.back());
    for (size_t i = limbs_.size() - 1; i-- > 0;) {
        std::string part = std::to_string(limbs_[i]);
        s += std::string(9 - part.size(), '0') + part;
    }
    return s;
}

long long BigInt::to_ll() const {
    constexpr long long kMax = 9223372036854775807LL;
    long long v = 0;
    for (size_t i = limbs_.size(); i-- > 0;) {
        if (v > (kMax - limbs_[i]) / static_cast<long long>(kBase))
            throw std::overflow_error("BigInt: out of long long range");
        v = v * kBase + limbs_[i];
    }
    return sign() < 0 ? -v : v;
}

BigInt gcd(BigInt a, BigInt b) {
    a = a.abs();
    b = b.abs();
    while (!b.is_zero()) {
        BigInt r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

} // namespace xcc
