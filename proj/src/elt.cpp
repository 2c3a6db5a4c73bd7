#include "muse/elt.hpp"

#include <bit>
#include <string>

#include "muse/errors.hpp"

namespace muse::code {

std::vector<WideInt> symbol_error_values(const std::vector<std::uint16_t>& symbol,
                                         std::uint32_t mask, ErrorModel model) {
    std::vector<std::uint16_t> bits;
    for (unsigned t = 0; t < symbol.size(); ++t)
        if (mask >> t & 1u) bits.push_back(symbol[t]);
    if (bits.empty()) throw DomainError("symbol_error_values: empty flip mask");

    std::vector<WideInt> out;
    if (model == ErrorModel::full_transition) {
        unsigned p = bits.size();
        for (std::uint32_t signs = 0; signs < (1u << p); ++signs) {
            WideInt v;
            for (unsigned j = 0; j < p; ++j)
                v += WideInt::from_pow2(bits[j], (signs >> j & 1u) ? +1 : -1);
            out.push_back(v);
        }
    } else {
        WideInt v;
        for (std::uint16_t b : bits) v += WideInt::from_pow2(b, +1);
        out.push_back(v);
        if (model == ErrorModel::bidirectional) out.push_back(-v);
    }
    return out;
}

namespace {

ErrorPattern pattern_for(const std::vector<std::uint16_t>& symbol, std::uint32_t mask,
                         int uniform_dir) {
    ErrorPattern p;
    for (unsigned t = 0; t < symbol.size(); ++t)
        if (mask >> t & 1u) p.flips.push_back({symbol[t], uniform_dir});
    return p;
}

} // namespace

ErrorLookupTable ErrorLookupTable::build(const CodeSpec& spec) {
    spec.validate();

    ErrorLookupTable elt;
    elt.m_ = spec.m;
    if (spec.m > (1u << 24))
        throw DomainError("build_elt: multiplier too large for a dense table");
    elt.pos_.assign(spec.m, -1);
    elt.neg_.assign(spec.m, -1);

    auto insert = [&](const EltEntry& e) {
        auto& idx = e.error.negative() ? elt.neg_ : elt.pos_;
        if (e.remainder == 0)
            throw CollisionError("invalid multiplier " + std::to_string(spec.m) + ": error " +
                                 e.pattern.to_string() + " aliases the clean codeword");
        std::int32_t& slot = idx[e.remainder];
        if (slot >= 0)
            throw CollisionError("invalid multiplier " + std::to_string(spec.m) +
                                 ": remainder " + std::to_string(e.remainder) +
                                 " claimed by both " + elt.entries_[slot].pattern.to_string() +
                                 " and " + e.pattern.to_string());
        slot = std::int32_t(elt.entries_.size());
        elt.entries_.push_back(e);
    };

    const unsigned s = spec.symbol_size;
    for (unsigned sym = 0; sym < spec.num_symbols(); ++sym) {
        const auto& bits = spec.bit_assignment[sym];
        for (std::uint32_t mask = 1; mask < (1u << s); ++mask) {
            if (spec.error_model == ErrorModel::full_transition) {
                std::vector<std::uint16_t> set;
                for (unsigned t = 0; t < s; ++t)
                    if (mask >> t & 1u) set.push_back(bits[t]);
                for (std::uint32_t signs = 0; signs < (1u << set.size()); ++signs) {
                    EltEntry e;
                    e.symbol = sym;
                    for (unsigned j = 0; j < set.size(); ++j) {
                        int dir = (signs >> j & 1u) ? +1 : -1;
                        e.pattern.flips.push_back({set[j], dir});
                        e.error += WideInt::from_pow2(set[j], dir);
                    }
                    e.remainder = e.error.mod_u64(spec.m);
                    insert(e);
                }
            } else {
                EltEntry e;
                e.symbol = sym;
                e.pattern = pattern_for(bits, mask, +1);
                e.error = error_value(e.pattern);
                e.remainder = e.error.mod_u64(spec.m);
                insert(e);
                if (spec.error_model == ErrorModel::bidirectional) {
                    EltEntry neg;
                    neg.symbol = sym;
                    neg.pattern = pattern_for(bits, mask, -1);
                    neg.error = -e.error;
                    neg.remainder = neg.error.mod_u64(spec.m);
                    insert(neg);
                }
            }
        }
    }

    for (std::uint64_t r = 1; r < spec.m; ++r)
        if (elt.pos_[r] >= 0 && elt.neg_[r] >= 0) ++elt.aliased_;
    return elt;
}

std::vector<std::uint64_t> ErrorLookupTable::unused_remainders() const {
    std::vector<std::uint64_t> out;
    for (std::uint64_t r = 1; r < m_; ++r)
        if (pos_[r] < 0 && neg_[r] < 0) out.push_back(r);
    return out;
}

} // namespace muse::code
