#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "muse/code_spec.hpp"
#include "muse/elt.hpp"
#include "muse/magic.hpp"
#include "muse/wide_uint.hpp"

namespace muse::code {

enum class DecodeStatus { clean, corrected, detected_uncorrectable, miscorrection_risk };

/// Why a non-clean decode ended the way it did.
enum class DecodeDetail {
    none,
    unused_remainder,   // remainder hit no lookup entry
    contradiction,      // correction would spill outside the claimed symbol
    ambiguous,          // two aliased candidates both look plausible
    overflow            // corrected word left the n-bit range
};

struct DecodeResult {
    WideUint data;
    DecodeStatus status = DecodeStatus::clean;
    std::uint64_t remainder = 0;
    DecodeDetail detail = DecodeDetail::none;
    ErrorPattern pattern;  // actual flips undone, when a correction was applied
};

struct DecodeOptions {
    /// Default: reject corrections the containment check contradicts.
    /// When false (raw-alias policy) the correction is applied anyway and
    /// flagged miscorrection_risk.
    bool contradiction_check = true;
};

/// Shared decode surface so the evaluation harness treats MUSE, Hamming and
/// Reed-Solomon codecs uniformly.
class Codec {
public:
    virtual ~Codec() = default;
    virtual unsigned codeword_bits() const = 0;
    virtual unsigned data_bits() const = 0;
    virtual unsigned symbol_bits() const = 0;
    virtual unsigned symbol_count() const = 0;
    virtual std::vector<std::uint16_t> symbol_members(unsigned symbol) const = 0;
    virtual WideUint encode(const WideUint& data) const = 0;
    virtual DecodeResult decode(const WideUint& codeword) const = 0;
};

/// Largest data value encodable with multiplier m in n bits: floor((2^n-1)/m).
WideUint data_max(const CodeSpec& spec);

/// Unused data states above a 2^base_bits working range (Eq. 6 harvesting).
WideUint extra_states(const CodeSpec& spec, unsigned base_bits);

/// True when `data` lies in the harvested range [2^base_bits, capacity].
bool in_harvest_space(const CodeSpec& spec, const WideUint& data, unsigned base_bits);

/// MUSE encoder/decoder with cached magic constants and lookup table.
class MuseCodec : public Codec {
public:
    explicit MuseCodec(CodeSpec spec, DecodeOptions options = {});

    const CodeSpec& spec() const { return spec_; }
    const ErrorLookupTable& elt() const { return elt_; }
    const MagicConstants& magic() const { return magic_; }

    unsigned codeword_bits() const override { return spec_.n; }
    unsigned data_bits() const override { return spec_.k; }
    unsigned symbol_bits() const override { return spec_.symbol_size; }
    unsigned symbol_count() const override { return spec_.num_symbols(); }
    std::vector<std::uint16_t> symbol_members(unsigned symbol) const override {
        return spec_.bit_assignment.at(symbol);
    }

    WideUint encode(const WideUint& data) const override;
    DecodeResult decode(const WideUint& codeword) const override;
    DecodeResult decode(const WideUint& codeword, const DecodeOptions& options) const;

    /// Data recovered from a clean (remainder-zero) codeword.
    WideUint extract_data(const WideUint& clean_codeword) const;

    /// Bit permutation placing each symbol's bits on contiguous physical
    /// lanes: physical bit symbol*s+t = logical bit assignment[symbol][t].
    WideUint apply_shuffle(const WideUint& logical) const;
    WideUint unshuffle(const WideUint& physical) const;

private:
    CodeSpec spec_;
    DecodeOptions options_;
    MagicConstants magic_;
    ErrorLookupTable elt_;
    std::vector<WideUint> symbol_masks_;
};

} // namespace muse::code
