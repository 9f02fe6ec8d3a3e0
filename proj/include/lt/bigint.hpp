#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace lt {

/// Unsigned arbitrary-precision integer, sized for exact multiplicity and
/// cumulative-count arithmetic (factorial ratios overflow 64 bits quickly).
/// Little-endian base-2^32 limbs; the empty limb vector represents zero.
class BigUint {
public:
    BigUint() = default;

    BigUint(std::uint64_t v) {
        if (v == 0) return;
        limbs_.push_back(static_cast<std::uint32_t>(v & 0xffffffffu));
        if (v >> 32) limbs_.push_back(static_cast<std::uint32_t>(v >> 32));
    }

    static BigUint factorial(unsigned n) {
        BigUint r{1};
        for (unsigned k = 2; k <= n; ++k) r *= k;
        return r;
    }

    bool is_zero() const { return limbs_.empty(); }

    BigUint& operator+=(const BigUint& rhs) {
        if (limbs_.size() < rhs.limbs_.size()) limbs_.resize(rhs.limbs_.size(), 0);
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < limbs_.size(); ++i) {
            std::uint64_t sum = carry + limbs_[i];
            if (i < rhs.limbs_.size()) sum += rhs.limbs_[i];
            limbs_[i] = static_cast<std::uint32_t>(sum & 0xffffffffu);
            carry = sum >> 32;
        }
        if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
        return *this;
    }

    /// Subtraction; requires *this >= rhs.
    BigUint& operator-=(const BigUint& rhs) {
        if (*this < rhs) throw std::underflow_error("BigUint: negative result");
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < limbs_.size(); ++i) {
            std::int64_t d = static_cast<std::int64_t>(limbs_[i]) - borrow -
                             (i < rhs.limbs_.size() ? static_cast<std::int64_t>(rhs.limbs_[i]) : 0);
            borrow = 0;
            if (d < 0) {
                d += (std::int64_t{1} << 32);
                borrow = 1;
            }
            limbs_[i] = static_cast<std::uint32_t>(d);
        }
        trim();
        return *this;
    }

    BigUint& operator*=(std::uint32_t f) {
        if (f == 0) {
            limbs_.clear();
            return *this;
        }
        std::uint64_t carry = 0;
        for (auto& limb : limbs_) {
            std::uint64_t prod = std::uint64_t{limb} * f + carry;
            limb = static_cast<std::uint32_t>(prod & 0xffffffffu);
            carry = prod >> 32;
        }
        if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
        return *this;
    }

    /// Exact division by a small divisor; throws if a remainder is left.
    BigUint& div_exact(std::uint32_t d) {
        if (d == 0) throw std::invalid_argument("BigUint: division by zero");
        std::uint64_t rem = 0;
        for (std::size_t i = limbs_.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | limbs_[i];
            limbs_[i] = static_cast<std::uint32_t>(cur / d);
            rem = cur % d;
        }
        if (rem != 0) throw std::logic_error("BigUint: division was not exact");
        trim();
        return *this;
    }

    friend bool operator==(const BigUint& a, const BigUint& b) { return a.limbs_ == b.limbs_; }
    friend bool operator!=(const BigUint& a, const BigUint& b) { return !(a == b); }

    friend bool operator<(const BigUint& a, const BigUint& b) {
        if (a.limbs_.size() != b.limbs_.size()) return a.limbs_.size() < b.limbs_.size();
        for (std::size_t i = a.limbs_.size(); i-- > 0;)
            if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i];
        return false;
    }

    bool fits_u64() const { return limbs_.size() <= 2; }

    std::uint64_t to_u64() const {
        if (!fits_u64()) throw std::overflow_error("BigUint: value exceeds 64 bits");
        std::uint64_t v = 0;
        if (limbs_.size() > 1) v = std::uint64_t{limbs_[1]} << 32;
        if (!limbs_.empty()) v |= limbs_[0];
        return v;
    }

    /// Nearest double (exact while the value stays below 2^53).
    double to_double() const {
        double v = 0.0;
        for (std::size_t i = limbs_.size(); i-- > 0;) v = v * 4294967296.0 + limbs_[i];
        return v;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        BigUint tmp = *this;
        std::string out;
        while (!tmp.is_zero()) {
            std::uint64_t rem = 0;
            for (std::size_t i = tmp.limbs_.size(); i-- > 0;) {
                std::uint64_t cur = (rem << 32) | tmp.limbs_[i];
                tmp.limbs_[i] = static_cast<std::uint32_t>(cur / 1000000000u);
                rem = cur % 1000000000u;
            }
            tmp.trim();
            std::string chunk = std::to_string(rem);
            if (!tmp.is_zero()) chunk.insert(0, 9 - chunk.size(), '0');
            out.insert(0, chunk);
        }
        return out;
    }

private:
    void trim() {
        while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    }

    std::vector<std::uint32_t> limbs_;
};

}  // namespace lt
