#pragma once

#include <cstdint>
#include <vector>

#include "muse/codec.hpp"
#include "muse/wide_uint.hpp"

namespace muse::baselines {

/// Binary Hamming codes over 72-bit words.
///
/// (72,64) SEC-DED: 7 syndrome rows plus an overall-parity row. (72,65) SEC:
/// 7 syndrome rows only. Check positions carry identity columns; data
/// positions carry a fixed pseudorandom spread over the remaining nonzero
/// 7-bit values (a clustered selection such as 1..71 skews multi-bit
/// detection far from the uniform ideal).
class HammingCode : public code::Codec {
public:
    enum class Kind { secded_72_64, sec_72_65 };

    explicit HammingCode(Kind kind);
    /// Same code with a caller-supplied data-column order (must be a
    /// permutation of the default set).
    HammingCode(Kind kind, std::vector<std::uint8_t> data_columns);

    unsigned codeword_bits() const override { return 72; }
    unsigned data_bits() const override { return k_; }
    unsigned symbol_bits() const override { return 1; }
    unsigned symbol_count() const override { return 72; }
    std::vector<std::uint16_t> symbol_members(unsigned symbol) const override {
        return {std::uint16_t(symbol)};
    }

    WideUint encode(const WideUint& data) const override;
    code::DecodeResult decode(const WideUint& codeword) const override;

    /// 8-bit (SEC-DED) or 7-bit (SEC) syndrome of a received word.
    unsigned syndrome(const WideUint& word) const;
    /// Column of H at a position, in the same width as syndrome().
    unsigned column(unsigned position) const { return columns_[position]; }
    /// True when the value equals some column (a miscorrectable syndrome).
    bool syndrome_matches_column(unsigned syndrome_value) const;

private:
    void build(std::vector<std::uint8_t> data_columns);

    Kind kind_;
    unsigned k_;
    std::vector<unsigned> columns_;       // per position
    std::vector<int> position_of_column_; // syndrome -> position or -1
    std::vector<unsigned> data_positions_;
};

/// The default spread of data columns for a code with `count` data bits.
std::vector<std::uint8_t> hamming_default_columns(unsigned count);

} // namespace muse::baselines
