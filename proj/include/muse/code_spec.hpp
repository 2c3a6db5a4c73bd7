#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "muse/wide_uint.hpp"

namespace muse::code {

/// Which symbol-error transitions the code must give unique remainders.
///  - bidirectional: every bit of a failing symbol flips the same way,
///    either all 0->1 or all 1->0; with contiguous symbols this covers every
///    value transition of the symbol.
///  - unidirectional_0to1: only 0->1 flips (failing devices drift one way).
///  - full_transition: independent per-bit flip directions (3^s - 1 values
///    per symbol); needed for bidirectional protection of shuffled symbols.
enum class ErrorModel { bidirectional, unidirectional_0to1, full_transition };

enum class Form { systematic, non_systematic };

using Assignment = std::vector<std::vector<std::uint16_t>>;

/// Symbol i = bits [i*s, (i+1)*s).
Assignment sequential_assignment(unsigned n, unsigned s);

/// Interleaved assignment: split [0,n) into `groups` contiguous spans; within
/// each span, symbol j takes every (span/s)-th bit starting at j. With one
/// group over 80 bits and s=8 this is exactly the x8 stride layout
/// S_i = [b_i, b_{10+i}, ..., b_{70+i}].
Assignment stride_assignment(unsigned n, unsigned s, unsigned groups);

/// Full description of one MUSE code.
struct CodeSpec {
    std::string name;          // identifier used by the CLI/registry
    unsigned n = 0;            // codeword bits
    unsigned k = 0;            // data bits
    unsigned rb = 0;           // redundancy bits, == ceil(log2 m)
    std::uint64_t m = 0;       // multiplier, odd
    unsigned symbol_size = 1;  // s
    ErrorModel error_model = ErrorModel::bidirectional;
    Form form = Form::non_systematic;
    Assignment bit_assignment; // partition of [0,n) into n/s symbols
    std::string assignment_label = "sequential";  // provenance for serialization

    unsigned num_symbols() const { return n / symbol_size; }

    /// OR of 2^b over the symbol's member bits.
    WideUint symbol_mask(unsigned symbol) const;

    /// Throws DomainError describing the first violated invariant.
    void validate() const;
};

/// One bit flip: direction +1 is 0->1 (error value +2^bit), -1 is 1->0.
struct BitFlip {
    std::uint16_t bit = 0;
    int direction = +1;
    friend bool operator==(const BitFlip&, const BitFlip&) = default;
};

/// A set of distinct-position flips; order follows ascending bit index.
struct ErrorPattern {
    std::vector<BitFlip> flips;
    friend bool operator==(const ErrorPattern&, const ErrorPattern&) = default;
    std::string to_string() const;  // e.g. "{+3,-17}"
};

/// Signed error value sum p(i)*2^i over the pattern's flips.
WideInt error_value(const ErrorPattern& pattern);

} // namespace muse::code
