#pragma once

#include <cstdint>

#include "muse/codec.hpp"
#include "muse/gf.hpp"
#include "muse/wide_uint.hpp"

namespace muse::baselines {

/// Reed-Solomon single-symbol-correct codes with two check symbols
/// (distance 3): RS(40,32)/GF(16), RS(80,64)/GF(256), RS(144,128)/GF(256).
/// Sizes are in bits; symbols are field elements packed little-endian.
class RsCode : public code::Codec {
public:
    RsCode(const GaloisField& field, unsigned n_symbols, unsigned k_symbols);

    unsigned codeword_bits() const override { return n_sym_ * field_.symbol_bits(); }
    unsigned data_bits() const override { return k_sym_ * field_.symbol_bits(); }
    unsigned symbol_bits() const override { return field_.symbol_bits(); }
    unsigned symbol_count() const override { return n_sym_; }
    std::vector<std::uint16_t> symbol_members(unsigned symbol) const override;

    WideUint encode(const WideUint& data) const override;
    code::DecodeResult decode(const WideUint& codeword) const override;

    /// The two syndromes (s0, s1) of a received word.
    std::pair<std::uint8_t, std::uint8_t> syndromes(const WideUint& word) const;

private:
    std::uint8_t symbol_at(const WideUint& w, unsigned i) const;
    void set_symbol(WideUint& w, unsigned i, std::uint8_t v) const;

    const GaloisField& field_;
    unsigned n_sym_, k_sym_;
};

} // namespace muse::baselines
