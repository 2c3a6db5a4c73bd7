#include "muse/gf.hpp"

#include "muse/errors.hpp"

namespace muse::baselines {

GaloisField::GaloisField(unsigned order, unsigned primitive_poly) : order_(order) {
    if (order != 16 && order != 256) throw DomainError("gf: order must be 16 or 256");
    bits_ = order == 16 ? 4 : 8;
    exp_.assign(order_, 0);
    log_.assign(order_, 0);

    unsigned x = 1;
    for (unsigned i = 0; i < order_ - 1; ++i) {
        if (x >= order_ || (i && x == 1))
            throw DomainError("gf: polynomial is not primitive for this order");
        exp_[i] = std::uint8_t(x);
        log_[x] = std::uint8_t(i);
        x <<= 1;
        if (x & order_) x ^= primitive_poly;
    }
    for (unsigned a = 1; a < order_; ++a) {
        std::uint8_t ia = inv(std::uint8_t(a));
        if (mul(std::uint8_t(a), ia) != 1) throw DomainError("gf: inverse table failed verification");
    }
}

std::uint8_t GaloisField::inv(std::uint8_t a) const {
    if (a == 0) throw DomainError("gf: zero has no inverse");
    return exp_[(order_ - 1 - log_[a]) % (order_ - 1)];
}

unsigned GaloisField::log(std::uint8_t a) const {
    if (a == 0) throw DomainError("gf: log of zero");
    return log_[a];
}

const GaloisField& GaloisField::gf16() {
    static const GaloisField f(16, 0x13);
    return f;
}

const GaloisField& GaloisField::gf256() {
    static const GaloisField f(256, 0x11d);
    return f;
}

} // namespace muse::baselines
