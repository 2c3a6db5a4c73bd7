#include "muse/magic.hpp"

#include <bit>
#include <string>

namespace muse {

MagicConstants derive_magic(std::uint64_t m, unsigned max_dividend_bits) {
    if (m < 3 || (m & 1) == 0)
        throw DomainError("derive_magic: divisor must be odd and >= 3, got " + std::to_string(m));
    if (max_dividend_bits == 0 || max_dividend_bits > 160)
        throw DomainError("derive_magic: max_dividend_bits must be in [1, 160]");

    const unsigned mbits = std::bit_width(m);
    const WideUint cmax = WideUint::pow2(max_dividend_bits) - WideUint{1};

    // Smallest shift with (inverse*m - 2^shift) * cmax < 2^shift. This makes
    // both the quotient and the discarded-bits remainder exact for all
    // dividends up to max_dividend_bits bits.
    for (unsigned shift = mbits; shift <= max_dividend_bits + mbits + 1; ++shift) {
        WideUint p2 = WideUint::pow2(shift);
        auto dm = p2.divmod_u64(m);
        std::uint64_t residue = dm.remainder.to_u64();
        WideUint inverse = dm.quotient;
        std::uint64_t excess = 0;  // inverse*m - 2^shift
        if (residue != 0) {
            inverse += WideUint{1};
            excess = m - residue;
        }
        if (WideUint{excess} * cmax < p2) {
            MagicConstants magic{m, inverse, shift, max_dividend_bits};
            if (magic.inverse.bit_length() + max_dividend_bits > WideUint::kBits)
                throw DomainError("derive_magic: constants exceed the 320-bit working width");
            return magic;
        }
    }
    throw DomainError("derive_magic: no shift found (unreachable for valid input)");
}

WideUint fast_div(const WideUint& c, const MagicConstants& magic) {
    if (c.bit_length() > magic.max_dividend_bits)
        throw DomainError("fast_div: dividend wider than max_dividend_bits");
    return (c * magic.inverse) >> magic.shift;
}

std::uint64_t fast_mod(const WideUint& c, const MagicConstants& magic) {
    if (c.bit_length() > magic.max_dividend_bits)
        throw DomainError("fast_mod: dividend wider than max_dividend_bits");
    WideUint low = (c * magic.inverse).low_bits(magic.shift);
    return ((low * WideUint{magic.divisor}) >> magic.shift).to_u64();
}

} // namespace muse
