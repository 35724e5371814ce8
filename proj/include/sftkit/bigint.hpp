#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

namespace sftkit {

// Unsigned big integer, base 2^32 limbs. Just what exact block counting
// needs: increment, add, multiply, compare, log2, decimal printing.
class BigUint {
public:
    BigUint() = default;
    BigUint(uint64_t v) {  // NOLINT: implicit by design
        if (v) {
            limbs_.push_back(static_cast<uint32_t>(v));
            if (v >> 32) limbs_.push_back(static_cast<uint32_t>(v >> 32));
        }
    }

    bool is_zero() const { return limbs_.empty(); }

    BigUint& operator+=(const BigUint& o) {
        uint64_t carry = 0;
        size_t n = std::max(limbs_.size(), o.limbs_.size());
        limbs_.resize(n, 0);
        for (size_t i = 0; i < n; ++i) {
            uint64_t s = carry + limbs_[i] + (i < o.limbs_.size() ? o.limbs_[i] : 0);
            limbs_[i] = static_cast<uint32_t>(s);
            carry = s >> 32;
        }
        if (carry) limbs_.push_back(static_cast<uint32_t>(carry));
        return *this;
    }

    friend BigUint operator+(BigUint a, const BigUint& b) { return a += b; }

    friend BigUint operator*(const BigUint& a, const BigUint& b) {
        if (a.is_zero() || b.is_zero()) return BigUint();
        BigUint r;
        r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
        for (size_t i = 0; i < a.limbs_.size(); ++i) {
            uint64_t carry = 0;
            for (size_t j = 0; j < b.limbs_.size(); ++j) {
                uint64_t cur = r.limbs_[i + j] + static_cast<uint64_t>(a.limbs_[i]) * b.limbs_[j] + carry;
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
        return r;
    }

    bool operator==(const BigUint& o) const { return limbs_ == o.limbs_; }
    bool operator!=(const BigUint& o) const { return !(*this == o); }
    bool operator<(const BigUint& o) const {
        if (limbs_.size() != o.limbs_.size()) return limbs_.size() < o.limbs_.size();
        for (size_t i = limbs_.size(); i-- > 0;)
            if (limbs_[i] != o.limbs_[i]) return limbs_[i] < o.limbs_[i];
        return false;
    }
    bool operator<=(const BigUint& o) const { return *this < o || *this == o; }

    // log2, exact for small values, within double rounding otherwise.
    // Requires a nonzero value.
    double log2() const {
        size_t n = limbs_.size();
        if (n <= 2) {
            uint64_t v = to_u64();
            return std::log2(static_cast<double>(v));
        }
        // top 64 bits as mantissa
        double top = static_cast<double>(limbs_[n - 1]) * 4294967296.0 + static_cast<double>(limbs_[n - 2]);
        return std::log2(top) + 32.0 * static_cast<double>(n - 2);
    }

    // Value as uint64_t; caller must know it fits.
    uint64_t to_u64() const {
        uint64_t v = 0;
        if (!limbs_.empty()) v = limbs_[0];
        if (limbs_.size() > 1) v |= static_cast<uint64_t>(limbs_[1]) << 32;
        return v;
    }
    bool fits_u64() const { return limbs_.size() <= 2; }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::vector<uint32_t> work = limbs_;
        std::string digits;
        while (!work.empty()) {
            uint64_t rem = 0;
            for (size_t i = work.size(); i-- > 0;) {
                uint64_t cur = (rem << 32) | work[i];
                work[i] = static_cast<uint32_t>(cur / 1000000000u);
                rem = cur % 1000000000u;
            }
            while (!work.empty() && work.back() == 0) work.pop_back();
            for (int d = 0; d < 9; ++d) {
                digits.push_back(static_cast<char>('0' + rem % 10));
                rem /= 10;
            }
        }
        while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
        return std::string(digits.rbegin(), digits.rend());
    }

    static BigUint pow(uint64_t base, uint64_t exp) {
        BigUint r(1);
        BigUint b(base);
        while (exp) {
            if (exp & 1) r = r * b;
            b = b * b;
            exp >>= 1;
        }
        return r;
    }

private:
    void trim() {
        while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    }
    std::vector<uint32_t> limbs_;  // little-endian
};

}  // namespace sftkit
