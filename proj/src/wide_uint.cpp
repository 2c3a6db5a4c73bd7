#include "muse/wide_uint.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cctype>
#include <cmath>
#include <ostream>
#include <vector>

namespace muse {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

WideUint WideUint::pow2(unsigned bit) {
    if (bit >= kBits) throw OverflowError("pow2: bit " + std::to_string(bit) + " out of width");
    WideUint r;
    r.limbs_[bit / 64] = u64{1} << (bit % 64);
    return r;
}

bool WideUint::is_zero() const {
    for (u64 w : limbs_)
        if (w) return false;
    return true;
}

unsigned WideUint::bit_length() const {
    for (int i = kLimbs - 1; i >= 0; --i)
        if (limbs_[i]) return 64u * i + (64 - std::countl_zero(limbs_[i]));
    return 0;
}

bool WideUint::bit(unsigned i) const {
    if (i >= kBits) return false;
    return (limbs_[i / 64] >> (i % 64)) & 1u;
}

void WideUint::set_bit(unsigned i, bool value) {
    if (i >= kBits) throw OverflowError("set_bit: index out of width");
    u64 mask = u64{1} << (i % 64);
    if (value)
        limbs_[i / 64] |= mask;
    else
        limbs_[i / 64] &= ~mask;
}

std::uint64_t WideUint::to_u64() const {
    for (unsigned i = 1; i < kLimbs; ++i)
        if (limbs_[i]) throw OverflowError("to_u64: value exceeds 64 bits");
    return limbs_[0];
}

WideUint& WideUint::operator+=(const WideUint& rhs) {
    u64 carry = 0;
    for (unsigned i = 0; i < kLimbs; ++i) {
        u128 s = u128(limbs_[i]) + rhs.limbs_[i] + carry;
        limbs_[i] = u64(s);
        carry = u64(s >> 64);
    }
    if (carry) throw OverflowError("add overflows 320 bits");
    return *this;
}

WideUint& WideUint::operator-=(const WideUint& rhs) {
    u64 borrow = 0;
    for (unsigned i = 0; i < kLimbs; ++i) {
        u128 d = u128(limbs_[i]) - rhs.limbs_[i] - borrow;
        limbs_[i] = u64(d);
        borrow = (d >> 64) ? 1 : 0;
    }
    if (borrow) throw OverflowError("subtraction underflows");
    return *this;
}

WideUint& WideUint::operator*=(const WideUint& rhs) {
    std::array<u64, 2 * kLimbs> prod{};
    for (unsigned i = 0; i < kLimbs; ++i) {
        if (!limbs_[i]) continue;
        u64 carry = 0;
        for (unsigned j = 0; j < kLimbs; ++j) {
            u128 cur = u128(limbs_[i]) * rhs.limbs_[j] + prod[i + j] + carry;
            prod[i + j] = u64(cur);
            carry = u64(cur >> 64);
        }
        prod[i + kLimbs] += carry;
    }
    for (unsigned i = kLimbs; i < 2 * kLimbs; ++i)
        if (prod[i]) throw OverflowError("multiply overflows 320 bits");
    std::copy(prod.begin(), prod.begin() + kLimbs, limbs_.begin());
    return *this;
}

WideUint& WideUint::operator<<=(unsigned n) {
    if (n == 0) return *this;
    if (bit_length() + n > kBits) throw OverflowError("left shift overflows 320 bits");
    unsigned limb_shift = n / 64, bit_shift = n % 64;
    for (int i = kLimbs - 1; i >= 0; --i) {
        u64 v = 0;
        int src = i - int(limb_shift);
        if (src >= 0) {
            v = limbs_[src] << bit_shift;
            if (bit_shift && src > 0) v |= limbs_[src - 1] >> (64 - bit_shift);
        }
        limbs_[i] = v;
    }
    return *this;
}

WideUint& WideUint::operator>>=(unsigned n) {
    if (n == 0) return *this;
    if (n >= kBits) {
        limbs_.fill(0);
        return *this;
    }
    unsigned limb_shift = n / 64, bit_shift = n % 64;
    for (unsigned i = 0; i < kLimbs; ++i) {
        u64 v = 0;
        unsigned src = i + limb_shift;
        if (src < kLimbs) {
            v = limbs_[src] >> bit_shift;
            if (bit_shift && src + 1 < kLimbs) v |= limbs_[src + 1] << (64 - bit_shift);
        }
        limbs_[i] = v;
    }
    return *this;
}

WideUint& WideUint::operator&=(const WideUint& rhs) {
    for (unsigned i = 0; i < kLimbs; ++i) limbs_[i] &= rhs.limbs_[i];
    return *this;
}
WideUint& WideUint::operator|=(const WideUint& rhs) {
    for (unsigned i = 0; i < kLimbs; ++i) limbs_[i] |= rhs.limbs_[i];
    return *this;
}
WideUint& WideUint::operator^=(const WideUint& rhs) {
    for (unsigned i = 0; i < kLimbs; ++i) limbs_[i] ^= rhs.limbs_[i];
    return *this;
}

std::strong_ordering operator<=>(const WideUint& a, const WideUint& b) {
    for (int i = WideUint::kLimbs - 1; i >= 0; --i) {
        if (a.limbs_[i] != b.limbs_[i])
            return a.limbs_[i] < b.limbs_[i] ? std::strong_ordering::less
                                             : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

WideUint WideUint::low_bits(unsigned bits) const {
    WideUint r = *this;
    if (bits >= kBits) return r;
    for (unsigned i = 0; i < kLimbs; ++i) {
        unsigned lo = i * 64;
        if (lo >= bits)
            r.limbs_[i] = 0;
        else if (lo + 64 > bits)
            r.limbs_[i] &= (u64{1} << (bits - lo)) - 1;
    }
    return r;
}

// Knuth algorithm D on 32-bit digits. Division is not on any hot path
// (searches and decoders use the magic-constant route); clarity wins here.
DivMod WideUint::divmod(const WideUint& divisor) const {
    if (divisor.is_zero()) throw DomainError("division by zero");
    if (*this < divisor) return {WideUint{}, *this};

    auto to_digits = [](const WideUint& v) {
        std::vector<std::uint32_t> d;
        for (unsigned i = 0; i < kLimbs; ++i) {
            d.push_back(std::uint32_t(v.limbs_[i]));
            d.push_back(std::uint32_t(v.limbs_[i] >> 32));
        }
        while (d.size() > 1 && d.back() == 0) d.pop_back();
        return d;
    };
    std::vector<std::uint32_t> u = to_digits(*this), v = to_digits(divisor);
    const size_t n = v.size(), m = u.size() - n;

    if (n == 1) {
        auto dm = divmod_u64(v[0]);
        return dm;
    }

    // Normalize so the top divisor digit has its high bit set.
    unsigned s = std::countl_zero(v.back());
    std::vector<std::uint32_t> vn(n), un(u.size() + 1);
    for (size_t i = n - 1; i > 0; --i)
        vn[i] = (v[i] << s) | (s ? std::uint32_t(std::uint64_t(v[i - 1]) >> (32 - s)) : 0);
    vn[0] = v[0] << s;
    un[u.size()] = s ? std::uint32_t(std::uint64_t(u.back()) >> (32 - s)) : 0;
    for (size_t i = u.size() - 1; i > 0; --i)
        un[i] = (u[i] << s) | (s ? std::uint32_t(std::uint64_t(u[i - 1]) >> (32 - s)) : 0);
    un[0] = u[0] << s;

    std::vector<std::uint32_t> q(m + 1, 0);
    const std::uint64_t base = std::uint64_t{1} << 32;
    for (size_t j = m + 1; j-- > 0;) {
        std::uint64_t num = (std::uint64_t(un[j + n]) << 32) | un[j + n - 1];
        std::uint64_t qhat = num / vn[n - 1];
        std::uint64_t rhat = num % vn[n - 1];
        while (qhat >= base ||
               qhat * vn[n - 2] > ((rhat << 32) | un[j + n - 2])) {
            --qhat;
            rhat += vn[n - 1];
            if (rhat >= base) break;
        }
        // Multiply-subtract; qhat may still be one too large.
        std::int64_t borrow = 0;
        std::uint64_t carry = 0;
        for (size_t i = 0; i < n; ++i) {
            std::uint64_t p = qhat * vn[i] + carry;
            carry = p >> 32;
            std::int64_t t = std::int64_t(un[i + j]) - std::int64_t(p & 0xffffffffu) - borrow;
            un[i + j] = std::uint32_t(t);
            borrow = t < 0 ? 1 : 0;
        }
        std::int64_t t = std::int64_t(un[j + n]) - std::int64_t(carry) - borrow;
        un[j + n] = std::uint32_t(t);
        if (t < 0) {
            --qhat;
            std::uint64_t c = 0;
            for (size_t i = 0; i < n; ++i) {
                std::uint64_t sum = std::uint64_t(un[i + j]) + vn[i] + c;
                un[i + j] = std::uint32_t(sum);
                c = sum >> 32;
            }
            un[j + n] = std::uint32_t(un[j + n] + c);
        }
        q[j] = std::uint32_t(qhat);
    }

    auto from_digits = [](const std::vector<std::uint32_t>& d) {
        WideUint r;
        for (size_t i = 0; i < d.size() && i < 2 * kLimbs; ++i)
            r.limbs_[i / 2] |= u64(d[i]) << (32 * (i % 2));
        return r;
    };
    WideUint quot = from_digits(q);
    std::vector<std::uint32_t> rem(n);
    for (size_t i = 0; i < n; ++i) rem[i] = un[i];
    WideUint r = from_digits(rem);
    r >>= s;
    return {quot, r};
}

std::uint64_t WideUint::mod_u64(std::uint64_t divisor) const {
    if (divisor == 0) throw DomainError("division by zero");
    u128 rem = 0;
    for (int i = kLimbs - 1; i >= 0; --i)
        rem = ((rem << 64) | limbs_[i]) % divisor;
    return u64(rem);
}

DivMod WideUint::divmod_u64(std::uint64_t divisor) const {
    if (divisor == 0) throw DomainError("division by zero");
    WideUint q;
    u128 rem = 0;
    for (int i = kLimbs - 1; i >= 0; --i) {
        u128 cur = (rem << 64) | limbs_[i];
        q.limbs_[i] = u64(cur / divisor);
        rem = cur % divisor;
    }
    return {q, WideUint{u64(rem)}};
}

WideUint WideUint::from_decimal(std::string_view s) {
    if (s.empty()) throw FormatError("empty decimal literal");
    WideUint r;
    for (char c : s) {
        if (c == '\'' || c == '_') continue;
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw FormatError(std::string("bad decimal digit '") + c + "'");
        u64 carry = u64(c - '0');
        for (unsigned i = 0; i < kLimbs; ++i) {
            u128 cur = u128(r.limbs_[i]) * 10 + carry;
            r.limbs_[i] = u64(cur);
            carry = u64(cur >> 64);
        }
        if (carry) throw OverflowError("decimal literal exceeds 320 bits");
    }
    return r;
}

WideUint WideUint::from_hex(std::string_view s) {
    if (s.starts_with("0x") || s.starts_with("0X")) s.remove_prefix(2);
    if (s.empty()) throw FormatError("empty hex literal");
    WideUint r;
    for (char c : s) {
        int d;
        if (c >= '0' && c <= '9') d = c - '0';
        else if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
        else if (c >= 'A' && c <= 'F') d = c - 'A' + 10;
        else throw FormatError(std::string("bad hex digit '") + c + "'");
        r <<= 4;
        r.limbs_[0] |= u64(d);
    }
    return r;
}

std::string WideUint::to_decimal() const {
    if (is_zero()) return "0";
    constexpr u64 chunk = 10'000'000'000'000'000'000ull;  // 10^19
    std::string out;
    WideUint v = *this;
    while (!v.is_zero()) {
        auto dm = v.divmod_u64(chunk);
        u64 part = dm.remainder.limbs_[0];
        v = dm.quotient;
        std::string digits = std::to_string(part);
        if (!v.is_zero())
            digits.insert(0, 19 - digits.size(), '0');
        out.insert(0, digits);
    }
    return out;
}

std::string WideUint::to_hex() const {
    if (is_zero()) return "0x0";
    std::string out = "0x";
    bool started = false;
    for (int i = kLimbs - 1; i >= 0; --i) {
        for (int nib = 15; nib >= 0; --nib) {
            unsigned d = (limbs_[i] >> (4 * nib)) & 0xf;
            if (!started && d == 0) continue;
            started = true;
            out += "0123456789abcdef"[d];
        }
    }
    return out;
}

double WideUint::log2() const {
    unsigned len = bit_length();
    if (len == 0) throw DomainError("log2 of zero");
    if (len <= 64) return std::log2(double(limbs_[0]));
    WideUint top = *this >> (len - 64);
    return double(len - 64) + std::log2(double(top.limbs_[0]));
}

std::ostream& operator<<(std::ostream& os, const WideUint& v) { return os << v.to_decimal(); }

// ---------------------------------------------------------------------------

WideInt::WideInt(std::int64_t v)
    : mag_(v < 0 ? WideUint{u64(-(v + 1)) + 1} : WideUint{u64(v)}), negative_(v < 0) {}

WideInt::WideInt(WideUint mag, bool negative) : mag_(std::move(mag)), negative_(negative) {
    normalize();
}

WideInt WideInt::from_pow2(unsigned bit, int sign) {
    return WideInt{WideUint::pow2(bit), sign < 0};
}

WideInt WideInt::operator-() const {
    WideInt r = *this;
    if (!r.is_zero()) r.negative_ = !r.negative_;
    return r;
}

WideInt& WideInt::operator+=(const WideInt& rhs) {
    if (negative_ == rhs.negative_) {
        mag_ += rhs.mag_;
    } else if (mag_ >= rhs.mag_) {
        mag_ -= rhs.mag_;
    } else {
        mag_ = rhs.mag_ - mag_;
        negative_ = rhs.negative_;
    }
    normalize();
    return *this;
}

WideInt& WideInt::operator-=(const WideInt& rhs) { return *this += -rhs; }

std::uint64_t WideInt::mod_u64(std::uint64_t m) const {
    u64 r = mag_.mod_u64(m);
    if (negative_ && r) r = m - r;
    return r;
}

std::string WideInt::to_decimal() const {
    return negative_ ? "-" + mag_.to_decimal() : mag_.to_decimal();
}

std::ostream& operator<<(std::ostream& os, const WideInt& v) { return os << v.to_decimal(); }

} // namespace muse
