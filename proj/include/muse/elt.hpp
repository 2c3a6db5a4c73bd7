#pragma once

#include <cstdint>
#include <vector>

#include "muse/code_spec.hpp"
#include "muse/wide_uint.hpp"

namespace muse::code {

/// One correctable error: the signed error value, the symbol it lives in,
/// and the canonical flip pattern that produces it.
struct EltEntry {
    std::uint64_t remainder = 0;  // canonical representative of error mod m, in (0, m)
    WideInt error;                // signed error value
    unsigned symbol = 0;
    ErrorPattern pattern;
};

/// Remainder -> correctable error lookup.
///
/// Keys live in signed space: positive-error entries are keyed by r = E mod m,
/// negative-error entries by the representative of E mod m on the negative
/// side. Within each side the map is bijective (a same-side collision makes
/// the multiplier invalid); a positive and a negative entry may share the
/// same unsigned representative (an aliased pair), which the decoder
/// disambiguates with the containment check.
class ErrorLookupTable {
public:
    static ErrorLookupTable build(const CodeSpec& spec);

    std::uint64_t modulus() const { return m_; }
    std::size_t size() const { return entries_.size(); }
    const std::vector<EltEntry>& entries() const { return entries_; }

    /// Entry whose positive (resp. negative) error has representative r; null if none.
    const EltEntry* positive(std::uint64_t r) const { return at(pos_, r); }
    const EltEntry* negative(std::uint64_t r) const { return at(neg_, r); }
    bool is_used(std::uint64_t r) const { return positive(r) || negative(r); }

    /// Unsigned representatives claimed by both a positive and a negative entry.
    std::size_t aliased_remainder_count() const { return aliased_; }

    std::vector<std::uint64_t> unused_remainders() const;

private:
    const EltEntry* at(const std::vector<std::int32_t>& idx, std::uint64_t r) const {
        if (r == 0 || r >= m_) return nullptr;
        std::int32_t i = idx[r];
        return i < 0 ? nullptr : &entries_[i];
    }

    std::uint64_t m_ = 0;
    std::vector<EltEntry> entries_;
    std::vector<std::int32_t> pos_, neg_;  // remainder -> entry index or -1
    std::size_t aliased_ = 0;
};

/// Error values of one symbol for one flip mask under the model:
/// bidirectional -> {+v, -v}, unidirectional -> {+v}, full_transition -> all
/// per-bit sign combinations, where v = sum of 2^bit over the mask's bits.
std::vector<WideInt> symbol_error_values(const std::vector<std::uint16_t>& symbol,
                                         std::uint32_t mask, ErrorModel model);

} // namespace muse::code
