#pragma once

#include <cstdint>
#include <vector>

namespace muse::baselines {

/// GF(2^w) for w in {4, 8} with log/antilog tables, exhaustively verified at
/// construction (every nonzero a satisfies a * inv(a) == 1).
class GaloisField {
public:
    GaloisField(unsigned order, unsigned primitive_poly);

    static const GaloisField& gf16();   // x^4 + x + 1
    static const GaloisField& gf256();  // x^8 + x^4 + x^3 + x^2 + 1

    unsigned order() const { return order_; }
    unsigned symbol_bits() const { return bits_; }

    std::uint8_t add(std::uint8_t a, std::uint8_t b) const { return a ^ b; }
    std::uint8_t mul(std::uint8_t a, std::uint8_t b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[(log_[a] + log_[b]) % (order_ - 1)];
    }
    std::uint8_t inv(std::uint8_t a) const;
    std::uint8_t div(std::uint8_t a, std::uint8_t b) const { return mul(a, inv(b)); }
    std::uint8_t alpha_pow(unsigned i) const { return exp_[i % (order_ - 1)]; }
    /// Discrete log base alpha; a must be nonzero.
    unsigned log(std::uint8_t a) const;

private:
    unsigned order_, bits_;
    std::vector<std::uint8_t> exp_, log_;
};

} // namespace muse::baselines
