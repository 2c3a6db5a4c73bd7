#include "muse/hamming.hpp"

#include <algorithm>

#include "muse/errors.hpp"

namespace muse::baselines {

namespace {

struct SplitMix {
    std::uint64_t state;
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t limit = bound * (UINT64_MAX / bound);
        std::uint64_t x;
        do { x = next(); } while (x >= limit);
        return x % bound;
    }
};

} // namespace

std::vector<std::uint8_t> hamming_default_columns(unsigned count) {
    std::vector<std::uint8_t> cand;
    for (unsigned v = 1; v < 128; ++v)
        if (v & (v - 1)) cand.push_back(std::uint8_t(v));  // skip identity columns
    SplitMix rng{7};  // frozen; chosen so odd-weight detection sits mid-band
    for (std::size_t i = cand.size() - 1; i > 0; --i)
        std::swap(cand[i], cand[rng.below(i + 1)]);
    if (count > cand.size()) throw DomainError("hamming: too many data columns requested");
    cand.resize(count);
    return cand;
}

HammingCode::HammingCode(Kind kind)
    : HammingCode(kind, hamming_default_columns(kind == Kind::secded_72_64 ? 64 : 65)) {}

HammingCode::HammingCode(Kind kind, std::vector<std::uint8_t> data_columns) : kind_(kind) {
    k_ = kind == Kind::secded_72_64 ? 64 : 65;
    if (data_columns.size() != k_) throw DomainError("hamming: need one column per data bit");
    build(std::move(data_columns));
}

void HammingCode::build(std::vector<std::uint8_t> data_columns) {
    const bool extended = kind_ == Kind::secded_72_64;
    const unsigned parity_row = 1u << 7;
    columns_.assign(72, 0);

    // Check bits first (identity columns), then data, then the overall
    // parity bit for the extended code.
    for (unsigned i = 0; i < 7; ++i) columns_[i] = (1u << i) | (extended ? parity_row : 0);
    for (unsigned i = 0; i < k_; ++i) {
        unsigned c = data_columns[i];
        if (c == 0 || c >= 128 || (c & (c - 1)) == 0)
            throw DomainError("hamming: data columns must be nonzero non-identity 7-bit values");
        columns_[7 + i] = c | (extended ? parity_row : 0);
        data_positions_.push_back(7 + i);
    }
    if (extended) columns_[71] = parity_row;

    position_of_column_.assign(256, -1);
    for (unsigned p = 0; p < 72; ++p) {
        if (position_of_column_[columns_[p]] != -1)
            throw DomainError("hamming: duplicate column");
        position_of_column_[columns_[p]] = int(p);
    }
}

unsigned HammingCode::syndrome(const WideUint& word) const {
    unsigned s = 0;
    for (unsigned p = 0; p < 72; ++p)
        if (word.bit(p)) s ^= columns_[p];
    return s;
}

bool HammingCode::syndrome_matches_column(unsigned value) const {
    return value < 256 && position_of_column_[value] >= 0;
}

WideUint HammingCode::encode(const WideUint& data) const {
    if (data.bit_length() > k_) throw CapacityError("hamming encode: data too wide");
    WideUint w;
    for (unsigned i = 0; i < k_; ++i)
        if (data.bit(i)) w.set_bit(data_positions_[i]);
    // Identity check columns let each syndrome row be solved directly.
    unsigned s = syndrome(w);
    for (unsigned i = 0; i < 7; ++i)
        if (s >> i & 1u) w.set_bit(i);
    if (kind_ == Kind::secded_72_64) {
        unsigned parity = 0;
        for (unsigned p = 0; p < 71; ++p) parity ^= unsigned(w.bit(p));
        if (parity) w.set_bit(71);
    }
    return w;
}

code::DecodeResult HammingCode::decode(const WideUint& codeword) const {
    if (codeword.bit_length() > 72) throw DomainError("hamming decode: word wider than 72 bits");
    code::DecodeResult res;
    unsigned s = syndrome(codeword);
    res.remainder = s;

    auto extract = [&](const WideUint& w) {
        WideUint d;
        for (unsigned i = 0; i < k_; ++i)
            if (w.bit(data_positions_[i])) d.set_bit(i);
        return d;
    };

    if (s == 0) {
        res.status = code::DecodeStatus::clean;
        res.data = extract(codeword);
        return res;
    }
    if (kind_ == Kind::secded_72_64 && !(s & 0x80)) {
        // Nonzero syndrome with even overall parity: >= 2 flips.
        res.status = code::DecodeStatus::detected_uncorrectable;
        res.detail = code::DecodeDetail::unused_remainder;
        return res;
    }
    int pos = position_of_column_[s];
    if (pos < 0) {
        res.status = code::DecodeStatus::detected_uncorrectable;
        res.detail = code::DecodeDetail::unused_remainder;
        return res;
    }
    WideUint corrected = codeword;
    corrected.set_bit(unsigned(pos), !codeword.bit(unsigned(pos)));
    res.status = code::DecodeStatus::corrected;
    res.pattern.flips.push_back({std::uint16_t(pos), codeword.bit(unsigned(pos)) ? +1 : -1});
    res.data = extract(corrected);
    return res;
}

} // namespace muse::baselines
