#ifndef TSYS_BIGINT_HPP
#define TSYS_BIGINT_HPP

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace tsys {

// Signed arbitrary-precision integer, little-endian base-2^32 limbs.
// Coefficients in this project stay small, so schoolbook algorithms are fine.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v) {
        if (v < 0) { neg_ = true; }
        unsigned long long u = neg_ ? 0ull - static_cast<unsigned long long>(v)
                                    : static_cast<unsigned long long>(v);
        while (u) { limbs_.push_back(static_cast<uint32_t>(u)); u >>= 32; }
    }
    BigInt(int v) : BigInt(static_cast<long long>(v)) {}

    static BigInt from_string(const std::string& s) {
        BigInt r;
        size_t i = 0;
        bool neg = false;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) { neg = s[i] == '-'; ++i; }
        if (i == s.size()) throw std::invalid_argument("BigInt: empty numeral");
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("BigInt: bad digit");
            r = r.mul_small(10);
            r = r + BigInt(s[i] - '0');
        }
        r.neg_ = neg && !r.is_zero();
        return r;
    }

    bool is_zero() const { return limbs_.empty(); }
    bool is_one() const { return !neg_ && limbs_.size() == 1 && limbs_[0] == 1; }
    bool negative() const { return neg_; }
    int sign() const { return is_zero() ? 0 : (neg_ ? -1 : 1); }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.neg_ == b.neg_ && a.limbs_ == b.limbs_;
    }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
    friend bool operator<(const BigInt& a, const BigInt& b) {
        if (a.neg_ != b.neg_) return a.neg_;
        int c = cmp_mag(a.limbs_, b.limbs_);
        return a.neg_ ? c > 0 : c < 0;
    }

    BigInt operator-() const {
        BigInt r = *this;
        if (!r.is_zero()) r.neg_ = !r.neg_;
        return r;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.neg_ == b.neg_) {
            BigInt r;
            r.limbs_ = add_mag(a.limbs_, b.limbs_);
            r.neg_ = a.neg_ && !r.limbs_.empty();
            return r;
        }
        int c = cmp_mag(a.limbs_, b.limbs_);
        if (c == 0) return BigInt();
        BigInt r;
        if (c > 0) { r.limbs_ = sub_mag(a.limbs_, b.limbs_); r.neg_ = a.neg_; }
        else       { r.limbs_ = sub_mag(b.limbs_, a.limbs_); r.neg_ = b.neg_; }
        if (r.limbs_.empty()) r.neg_ = false;
        return r;
    }
    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        if (a.is_zero() || b.is_zero()) return BigInt();
        BigInt r;
        r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
        for (size_t i = 0; i < a.limbs_.size(); ++i) {
            uint64_t carry = 0;
            for (size_t j = 0; j < b.limbs_.size(); ++j) {
                uint64_t cur = static_cast<uint64_t>(a.limbs_[i]) * b.limbs_[j] +
                               r.limbs_[i + j] + carry;
                r.limbs_[i + j] = static_cast<uint32_t>(cur);
                carry = cur >> 32;
            }
            size_t k = i + b.limbs_.size();
            while (carry) {
                uint64_t cur = r.limbs_[k] + carry;
                r.limbs_[k] = static_cast<uint32_t>(cur);
                carry = cur >> 32;
                ++k;
            }
        }
        r.trim();
        r.neg_ = (a.neg_ != b.neg_);
        return r;
    }

    BigInt& operator+=(const BigInt& o) { *this = *this + o; return *this; }
    BigInt& operator-=(const BigInt& o) { *this = *this - o; return *this; }
    BigInt& operator*=(const BigInt& o) { *this = *this * o; return *this; }

    // Truncated quotient and remainder, |r| < |b|, sign(r) = sign(a).
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
        if (b.is_zero()) throw std::domain_error("BigInt: division by zero");
        q = BigInt();
        r = BigInt();
        if (cmp_mag(a.limbs_, b.limbs_) < 0) { r = a; return; }
        // binary long division on magnitudes
        size_t nbits = a.limbs_.size() * 32;
        std::vector<uint32_t> rem, quo(a.limbs_.size(), 0);
        for (size_t i = nbits; i-- > 0;) {
            shl1(rem);
            if ((a.limbs_[i / 32] >> (i % 32)) & 1u) {
                if (rem.empty()) rem.push_back(1);
                else {
                    rem[0] |= 1u;
                }
            }
            if (cmp_mag(rem, b.limbs_) >= 0) {
                rem = sub_mag(rem, b.limbs_);
                quo[i / 32] |= (1u << (i % 32));
            }
        }
        q.limbs_ = std::move(quo);
        q.trim();
        r.limbs_ = std::move(rem);
        r.trim();
        q.neg_ = !q.limbs_.empty() && (a.neg_ != b.neg_);
        r.neg_ = !r.limbs_.empty() && a.neg_;
    }

    friend BigInt operator/(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return q;
    }
    friend BigInt operator%(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return r;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string digits;
        BigInt cur = *this;
        cur.neg_ = false;
        const BigInt ten(10);
        while (!cur.is_zero()) {
            BigInt q, r;
            divmod(cur, ten, q, r);
            digits.push_back(static_cast<char>('0' + (r.limbs_.empty() ? 0 : r.limbs_[0])));
            cur = q;
        }
        if (neg_) digits.push_back('-');
        return std::string(digits.rbegin(), digits.rend());
    }

    // Exact only when the value fits; used for small counts in tests.
    long long to_ll() const {
        unsigned long long u = 0;
        if (limbs_.size() > 2) throw std::overflow_error("BigInt: does not fit long long");
        for (size_t i = limbs_.size(); i-- > 0;) u = (u << 32) | limbs_[i];
        if (!neg_ && u > 0x7fffffffffffffffull) throw std::overflow_error("BigInt: does not fit");
        return neg_ ? -static_cast<long long>(u) : static_cast<long long>(u);
    }

private:
    BigInt mul_small(uint32_t m) const {
        BigInt r;
        uint64_t carry = 0;
        for (uint32_t limb : limbs_) {
            uint64_t cur = static_cast<uint64_t>(limb) * m + carry;
            r.limbs_.push_back(static_cast<uint32_t>(cur));
            carry = cur >> 32;
        }
        if (carry) r.limbs_.push_back(static_cast<uint32_t>(carry));
        r.neg_ = neg_ && !r.limbs_.empty();
        return r;
    }

    void trim() {
        while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
        if (limbs_.empty()) neg_ = false;
    }
    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }
    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b) {
        std::vector<uint32_t> r;
        uint64_t carry = 0;
        for (size_t i = 0; i < a.size() || i < b.size() || carry; ++i) {
            uint64_t cur = carry;
            if (i < a.size()) cur += a[i];
            if (i < b.size()) cur += b[i];
            r.push_back(static_cast<uint32_t>(cur));
            carry = cur >> 32;
        }
        return r;
    }
    // requires |a| >= |b|
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b) {
        std::vector<uint32_t> r(a);
        int64_t borrow = 0;
        for (size_t i = 0; i < r.size(); ++i) {
            int64_t cur = static_cast<int64_t>(r[i]) - borrow - (i < b.size() ? b[i] : 0);
            borrow = 0;
            if (cur < 0) { cur += (1ll << 32); borrow = 1; }
            r[i] = static_cast<uint32_t>(cur);
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }
    static void shl1(std::vector<uint32_t>& v) {
        uint32_t carry = 0;
        for (auto& limb : v) {
            uint32_t nc = limb >> 31;
            limb = (limb << 1) | carry;
            carry = nc;
        }
        if (carry) v.push_back(carry);
    }

    bool neg_ = false;
    std::vector<uint32_t> limbs_;
};

}  // namespace tsys

#endif
