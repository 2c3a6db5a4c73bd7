#include "muse/rs.hpp"

#include "muse/errors.hpp"

namespace muse::baselines {

RsCode::RsCode(const GaloisField& field, unsigned n_symbols, unsigned k_symbols)
    : field_(field), n_sym_(n_symbols), k_sym_(k_symbols) {
    if (n_sym_ - k_sym_ != 2) throw DomainError("rs: exactly two check symbols required");
    if (n_sym_ > field_.order() - 1) throw DomainError("rs: code longer than the field allows");
}

std::vector<std::uint16_t> RsCode::symbol_members(unsigned symbol) const {
    std::vector<std::uint16_t> bits(field_.symbol_bits());
    for (unsigned t = 0; t < bits.size(); ++t)
        bits[t] = std::uint16_t(symbol * field_.symbol_bits() + t);
    return bits;
}

std::uint8_t RsCode::symbol_at(const WideUint& w, unsigned i) const {
    unsigned sb = field_.symbol_bits();
    std::uint8_t v = 0;
    for (unsigned t = 0; t < sb; ++t)
        if (w.bit(i * sb + t)) v |= std::uint8_t(1u << t);
    return v;
}

void RsCode::set_symbol(WideUint& w, unsigned i, std::uint8_t v) const {
    unsigned sb = field_.symbol_bits();
    for (unsigned t = 0; t < sb; ++t) w.set_bit(i * sb + t, (v >> t) & 1u);
}

std::pair<std::uint8_t, std::uint8_t> RsCode::syndromes(const WideUint& word) const {
    std::uint8_t s0 = 0, s1 = 0;
    for (unsigned i = 0; i < n_sym_; ++i) {
        std::uint8_t c = symbol_at(word, i);
        if (!c) continue;
        s0 ^= c;
        s1 ^= field_.mul(c, field_.alpha_pow(i));
    }
    return {s0, s1};
}

WideUint RsCode::encode(const WideUint& data) const {
    if (data.bit_length() > data_bits()) throw CapacityError("rs encode: data too wide");
    WideUint w;
    // Data occupies symbols 2..n-1; checks at 0 and 1 zero both syndromes:
    //   c0 + c1         = A = sum d_i
    //   c0 + c1*alpha   = B = sum d_i*alpha^i
    std::uint8_t a = 0, b = 0;
    for (unsigned i = 2; i < n_sym_; ++i) {
        std::uint8_t d = symbol_at(data >> 0, i - 2);
        if (!d) continue;
        set_symbol(w, i, d);
        a ^= d;
        b ^= field_.mul(d, field_.alpha_pow(i));
    }
    std::uint8_t c1 = field_.div(std::uint8_t(a ^ b), std::uint8_t(1 ^ field_.alpha_pow(1)));
    std::uint8_t c0 = std::uint8_t(a ^ c1);
    set_symbol(w, 0, c0);
    set_symbol(w, 1, c1);
    return w;
}

code::DecodeResult RsCode::decode(const WideUint& codeword) const {
    if (codeword.bit_length() > codeword_bits())
        throw DomainError("rs decode: word wider than the code");
    code::DecodeResult res;
    auto [s0, s1] = syndromes(codeword);
    res.remainder = (std::uint64_t(s1) << 8) | s0;

    auto extract = [&](const WideUint& w) {
        WideUint d;
        for (unsigned i = 2; i < n_sym_; ++i) set_symbol(d, i - 2, symbol_at(w, i));
        return d;
    };

    if (s0 == 0 && s1 == 0) {
        res.status = code::DecodeStatus::clean;
        res.data = extract(codeword);
        return res;
    }
    if (s0 != 0 && s1 != 0) {
        unsigned loc = (field_.log(s1) + (field_.order() - 1) - field_.log(s0)) % (field_.order() - 1);
        if (loc < n_sym_) {
            WideUint corrected = codeword;
            set_symbol(corrected, loc, std::uint8_t(symbol_at(codeword, loc) ^ s0));
            res.status = code::DecodeStatus::corrected;
            res.data = extract(corrected);
            WideUint diff = corrected ^ codeword;
            for (unsigned bit = 0; bit < codeword_bits(); ++bit)
                if (diff.bit(bit))
                    res.pattern.flips.push_back({std::uint16_t(bit), codeword.bit(bit) ? +1 : -1});
            return res;
        }
    }
    res.status = code::DecodeStatus::detected_uncorrectable;
    res.detail = code::DecodeDetail::unused_remainder;
    return res;
}

} // namespace muse::baselines
