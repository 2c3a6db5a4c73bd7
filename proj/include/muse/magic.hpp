#pragma once

#include <cstdint>

#include "muse/wide_uint.hpp"

namespace muse {

/// Precomputed constants turning division by a fixed odd m into
/// multiply-and-shift: floor(c/m) == (c * inverse) >> shift for every
/// dividend c of at most max_dividend_bits bits, with
/// inverse == ceil(2^shift / m).
///
/// The shift is the smallest one for which the identity holds over the whole
/// dividend range; at that shift the discarded low bits of c*inverse also
/// recover the remainder exactly (the condition checked in derive_magic is
/// the remainder-exact one, which subsumes the quotient identity).
struct MagicConstants {
    std::uint64_t divisor = 0;
    WideUint inverse;
    unsigned shift = 0;
    unsigned max_dividend_bits = 0;
};

/// Derives magic constants for odd m >= 3. Throws DomainError for even or
/// undersized divisors, or when the constants cannot fit the fixed width.
MagicConstants derive_magic(std::uint64_t m, unsigned max_dividend_bits);

/// floor(c / m) via multiply-and-shift. Requires bit_length(c) <= max_dividend_bits.
WideUint fast_div(const WideUint& c, const MagicConstants& magic);

/// c mod m via the discarded-bits scheme: the low `shift` bits of c*inverse,
/// multiplied by m and shifted down, give the remainder directly.
std::uint64_t fast_mod(const WideUint& c, const MagicConstants& magic);

} // namespace muse
