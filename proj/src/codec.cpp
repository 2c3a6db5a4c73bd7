#include "muse/codec.hpp"

#include <string>

#include "muse/errors.hpp"

namespace muse::code {

WideUint data_max(const CodeSpec& spec) {
    WideUint top = WideUint::pow2(spec.n) - WideUint{1};
    return top.divmod_u64(spec.m).quotient;
}

WideUint extra_states(const CodeSpec& spec, unsigned base_bits) {
    if (spec.form == Form::systematic) {
        if (base_bits > spec.k)
            throw CapacityError("extra_states: base exceeds systematic capacity k");
        return WideUint::pow2(spec.k) - WideUint::pow2(base_bits);
    }
    WideUint cap = data_max(spec);
    WideUint base = WideUint::pow2(base_bits);
    if (base > cap) throw CapacityError("extra_states: base exceeds data_max");
    return cap + WideUint{1} - base;
}

bool in_harvest_space(const CodeSpec& spec, const WideUint& data, unsigned base_bits) {
    extra_states(spec, base_bits);  // range-check base_bits the same way
    return data >= WideUint::pow2(base_bits);
}

MuseCodec::MuseCodec(CodeSpec spec, DecodeOptions options)
    : spec_(std::move(spec)),
      options_(options),
      magic_(derive_magic(spec_.m, spec_.n)),
      elt_(ErrorLookupTable::build(spec_)) {
    symbol_masks_.reserve(spec_.num_symbols());
    for (unsigned i = 0; i < spec_.num_symbols(); ++i)
        symbol_masks_.push_back(spec_.symbol_mask(i));
}

WideUint MuseCodec::encode(const WideUint& data) const {
    if (spec_.form == Form::systematic) {
        if (data.bit_length() > spec_.k)
            throw CapacityError("encode: data exceeds " + std::to_string(spec_.k) + " bits");
        WideUint shifted = data << spec_.rb;
        std::uint64_t r = fast_mod(shifted, magic_);
        std::uint64_t x = r == 0 ? 0 : spec_.m - r;  // X stored mod m
        return shifted + WideUint{x};
    }
    if (data > data_max(spec_))
        throw CapacityError("encode: data exceeds data_max for m=" + std::to_string(spec_.m));
    return data * WideUint{spec_.m};
}

WideUint MuseCodec::extract_data(const WideUint& clean) const {
    if (spec_.form == Form::systematic) return clean >> spec_.rb;
    return fast_div(clean, magic_);
}

DecodeResult MuseCodec::decode(const WideUint& codeword) const { return decode(codeword, options_); }

DecodeResult MuseCodec::decode(const WideUint& codeword, const DecodeOptions& options) const {
    if (codeword.bit_length() > spec_.n)
        throw DomainError("decode: codeword wider than n bits");

    DecodeResult res;
    res.remainder = fast_mod(codeword, magic_);
    if (res.remainder == 0) {
        res.status = DecodeStatus::clean;
        res.data = extract_data(codeword);
        return res;
    }

    struct Candidate {
        const EltEntry* entry;
        WideUint corrected;
        bool in_range = false;
        bool contained = false;
    };
    Candidate cands[2] = {{elt_.positive(res.remainder), {}, false, false},
                          {elt_.negative(res.remainder), {}, false, false}};
    const WideUint limit = WideUint::pow2(spec_.n);

    int plausible = -1, plausible_count = 0, applied_fallback = -1;
    for (int i = 0; i < 2; ++i) {
        const EltEntry* e = cands[i].entry;
        if (!e) continue;
        const WideUint& mag = e->error.magnitude();
        if (!e->error.negative()) {
            if (mag > codeword) continue;  // would go negative
            cands[i].corrected = codeword - mag;
        } else {
            cands[i].corrected = codeword + mag;
            if (cands[i].corrected >= limit) continue;  // overflow out of n bits
        }
        cands[i].in_range = true;
        if (applied_fallback < 0) applied_fallback = i;
        WideUint diff = cands[i].corrected ^ codeword;
        if ((diff & symbol_masks_[e->symbol]) == diff) {
            cands[i].contained = true;
            plausible = i;
            ++plausible_count;
        }
    }

    auto finish_corrected = [&](const Candidate& c, DecodeStatus status) {
        res.status = status;
        res.data = extract_data(c.corrected);
        WideUint diff = c.corrected ^ codeword;
        for (unsigned b = 0; b < spec_.n; ++b)
            if (diff.bit(b)) res.pattern.flips.push_back({std::uint16_t(b), codeword.bit(b) ? +1 : -1});
    };

    if (plausible_count == 1) {
        // Re-verify the correction restored a multiple of m.
        if (fast_mod(cands[plausible].corrected, magic_) != 0)
            throw Error("decode: corrected word has nonzero remainder (internal)");
        finish_corrected(cands[plausible], DecodeStatus::corrected);
        return res;
    }

    if (!options.contradiction_check && applied_fallback >= 0) {
        // Raw-alias policy: apply the first in-range candidate regardless.
        finish_corrected(cands[applied_fallback], plausible_count == 1
                                                      ? DecodeStatus::corrected
                                                      : DecodeStatus::miscorrection_risk);
        res.detail = plausible_count == 2 ? DecodeDetail::ambiguous : DecodeDetail::contradiction;
        return res;
    }

    res.status = DecodeStatus::detected_uncorrectable;
    if (plausible_count == 2)
        res.detail = DecodeDetail::ambiguous;
    else if (cands[0].entry || cands[1].entry)
        res.detail = (cands[0].in_range || cands[1].in_range) ? DecodeDetail::contradiction
                                                              : DecodeDetail::overflow;
    else
        res.detail = DecodeDetail::unused_remainder;
    return res;
}

WideUint MuseCodec::apply_shuffle(const WideUint& logical) const {
    if (logical.bit_length() > spec_.n) throw DomainError("shuffle: value wider than n bits");
    WideUint phys;
    for (unsigned sym = 0; sym < spec_.num_symbols(); ++sym)
        for (unsigned t = 0; t < spec_.symbol_size; ++t)
            if (logical.bit(spec_.bit_assignment[sym][t]))
                phys.set_bit(sym * spec_.symbol_size + t);
    return phys;
}

WideUint MuseCodec::unshuffle(const WideUint& physical) const {
    if (physical.bit_length() > spec_.n) throw DomainError("unshuffle: value wider than n bits");
    WideUint logical;
    for (unsigned sym = 0; sym < spec_.num_symbols(); ++sym)
        for (unsigned t = 0; t < spec_.symbol_size; ++t)
            if (physical.bit(sym * spec_.symbol_size + t))
                logical.set_bit(spec_.bit_assignment[sym][t]);
    return logical;
}

} // namespace muse::code
