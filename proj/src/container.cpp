#include "muse/container.hpp"

#include <algorithm>
#include <cstring>

#include "muse/errors.hpp"

namespace muse::container {

namespace {

void put_u64(std::vector<std::uint8_t>& out, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) out.push_back(std::uint8_t(v >> (8 * i)));
}

std::uint64_t get_u64(std::span<const std::uint8_t> in, std::size_t at) {
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= std::uint64_t(in[at + i]) << (8 * i);
    return v;
}

} // namespace

std::vector<std::uint8_t> encode(std::span<const std::uint8_t> payload, const code::Codec& codec,
                                 std::uint64_t fingerprint) {
    const unsigned payload_bytes = codec.data_bits() / 8;
    const unsigned cw_bytes = (codec.codeword_bits() + 7) / 8;
    if (payload_bytes == 0) throw DomainError("container: codec payload smaller than a byte");

    const std::uint64_t blocks = payload.empty() ? 0 : (payload.size() + payload_bytes - 1) / payload_bytes;

    std::vector<std::uint8_t> out;
    out.insert(out.end(), kMagic, kMagic + 8);
    put_u64(out, fingerprint);
    put_u64(out, blocks);
    for (std::uint64_t bi = 0; bi < blocks; ++bi) {
        WideUint data;
        for (unsigned j = 0; j < payload_bytes; ++j) {
            std::size_t off = bi * payload_bytes + j;
            std::uint64_t byte = off < payload.size() ? payload[off] : 0;
            data |= WideUint{byte} << (8 * j);
        }
        WideUint cw = codec.encode(data);
        for (unsigned j = 0; j < cw_bytes; ++j)
            out.push_back(std::uint8_t((cw >> (8 * j)).limb(0) & 0xff));
    }
    put_u64(out, payload.size());
    return out;
}

DecodedFile decode(std::span<const std::uint8_t> file, const code::Codec& codec,
                   std::uint64_t fingerprint) {
    const unsigned payload_bytes = codec.data_bits() / 8;
    const unsigned cw_bytes = (codec.codeword_bits() + 7) / 8;
    if (file.size() < 32 || std::memcmp(file.data(), kMagic, 8) != 0)
        throw FormatError("container: bad magic");
    std::uint64_t fp = get_u64(file, 8);
    if (fp != fingerprint)
        throw FormatError("container: spec fingerprint mismatch (file was encoded with a "
                          "different code)");
    std::uint64_t blocks = get_u64(file, 16);
    if (file.size() != 32 + blocks * cw_bytes)
        throw FormatError("container: truncated or oversized file");
    std::uint64_t original_len = get_u64(file, 24 + blocks * cw_bytes);
    if (original_len > blocks * payload_bytes)
        throw FormatError("container: footer length exceeds payload capacity");

    DecodedFile out;
    out.payload.reserve(blocks * payload_bytes);
    for (std::uint64_t bi = 0; bi < blocks; ++bi) {
        WideUint cw;
        std::size_t base = 24 + bi * cw_bytes;
        for (unsigned j = 0; j < cw_bytes; ++j)
            cw |= WideUint{std::uint64_t(file[base + j])} << (8 * j);
        if (cw.bit_length() > codec.codeword_bits())
            throw FormatError("container: codeword " + std::to_string(bi) + " out of range");
        code::DecodeResult res = codec.decode(cw);
        bool ok = res.status == code::DecodeStatus::clean ||
                  res.status == code::DecodeStatus::corrected;
        if (res.status == code::DecodeStatus::corrected) ++out.corrected;
        if (!ok) ++out.uncorrectable;
        out.sidecar.push_back({bi, res.status, res.detail, ok});
        WideUint data = ok ? res.data : WideUint{};
        for (unsigned j = 0; j < payload_bytes; ++j)
            out.payload.push_back(std::uint8_t((data >> (8 * j)).limb(0) & 0xff));
    }
    out.payload.resize(original_len);
    return out;
}

} // namespace muse::container
