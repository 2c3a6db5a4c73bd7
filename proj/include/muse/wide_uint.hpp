#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "muse/errors.hpp"

namespace muse {

class WideUint;

/// Quotient/remainder pair from schoolbook division.
struct DivMod;

/// Fixed-width 320-bit unsigned integer.
///
/// Wide enough for a 160-bit codeword times a ~160-bit magic inverse, which is
/// the largest product the decoders form. All operations are exact: anything
/// that would not fit the width throws OverflowError instead of truncating.
class WideUint {
public:
    static constexpr unsigned kBits = 320;
    static constexpr unsigned kLimbs = kBits / 64;

    constexpr WideUint() = default;
    constexpr WideUint(std::uint64_t v) : limbs_{v, 0, 0, 0, 0} {}

    static WideUint pow2(unsigned bit);              // 2^bit, bit < kBits
    static WideUint from_decimal(std::string_view s);
    static WideUint from_hex(std::string_view s);

    bool is_zero() const;
    unsigned bit_length() const;                     // 0 for zero
    bool bit(unsigned i) const;
    void set_bit(unsigned i, bool value = true);

    std::uint64_t limb(unsigned i) const { return limbs_[i]; }

    /// Value as uint64_t; throws OverflowError if it does not fit.
    std::uint64_t to_u64() const;

    WideUint& operator+=(const WideUint& rhs);
    WideUint& operator-=(const WideUint& rhs);
    WideUint& operator*=(const WideUint& rhs);
    WideUint& operator<<=(unsigned n);
    WideUint& operator>>=(unsigned n);
    WideUint& operator&=(const WideUint& rhs);
    WideUint& operator|=(const WideUint& rhs);
    WideUint& operator^=(const WideUint& rhs);

    friend WideUint operator+(WideUint a, const WideUint& b) { return a += b; }
    friend WideUint operator-(WideUint a, const WideUint& b) { return a -= b; }
    friend WideUint operator*(WideUint a, const WideUint& b) { return a *= b; }
    friend WideUint operator<<(WideUint a, unsigned n) { return a <<= n; }
    friend WideUint operator>>(WideUint a, unsigned n) { return a >>= n; }
    friend WideUint operator&(WideUint a, const WideUint& b) { return a &= b; }
    friend WideUint operator|(WideUint a, const WideUint& b) { return a |= b; }
    friend WideUint operator^(WideUint a, const WideUint& b) { return a ^= b; }

    friend bool operator==(const WideUint& a, const WideUint& b) = default;
    friend std::strong_ordering operator<=>(const WideUint& a, const WideUint& b);

    /// Low `bits` bits of the value (mask, never throws).
    WideUint low_bits(unsigned bits) const;

    /// Schoolbook long division. Throws DomainError on zero divisor.
    DivMod divmod(const WideUint& divisor) const;

    /// Fast paths for machine-word divisors.
    std::uint64_t mod_u64(std::uint64_t divisor) const;
    DivMod divmod_u64(std::uint64_t divisor) const;

    std::string to_decimal() const;
    std::string to_hex() const;

    /// log2 of the value (requires nonzero). Accurate to ~2^-50.
    double log2() const;

private:
    std::array<std::uint64_t, kLimbs> limbs_{};
};

struct DivMod {
    WideUint quotient;
    WideUint remainder;
};

std::ostream& operator<<(std::ostream& os, const WideUint& v);

/// Signed value as sign + 320-bit magnitude; used for error values and
/// correction arithmetic. Zero is canonically non-negative.
class WideInt {
public:
    WideInt() = default;
    WideInt(std::int64_t v);
    explicit WideInt(WideUint mag, bool negative = false);

    static WideInt from_pow2(unsigned bit, int sign);  // sign*2^bit, sign in {-1,+1}

    bool is_zero() const { return mag_.is_zero(); }
    bool negative() const { return negative_; }
    int sign() const { return is_zero() ? 0 : (negative_ ? -1 : 1); }
    const WideUint& magnitude() const { return mag_; }

    WideInt operator-() const;
    WideInt& operator+=(const WideInt& rhs);
    WideInt& operator-=(const WideInt& rhs);
    friend WideInt operator+(WideInt a, const WideInt& b) { return a += b; }
    friend WideInt operator-(WideInt a, const WideInt& b) { return a -= b; }

    friend bool operator==(const WideInt& a, const WideInt& b) = default;

    /// Value mod m as the canonical representative in [0, m).
    std::uint64_t mod_u64(std::uint64_t m) const;

    std::string to_decimal() const;  // with leading '-' when negative

private:
    void normalize() { if (mag_.is_zero()) negative_ = false; }

    WideUint mag_{};
    bool negative_ = false;
};

std::ostream& operator<<(std::ostream& os, const WideInt& v);

} // namespace muse
