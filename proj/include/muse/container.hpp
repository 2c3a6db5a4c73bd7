#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "muse/codec.hpp"
#include "muse/eval.hpp"

namespace muse {

/// Encoded-file container, bit-exact layout:
///   8 bytes  magic "MUSEENC1"
///   8 bytes  spec fingerprint (FNV-1a 64 of the canonical spec text), LE
///   8 bytes  codeword count, LE
///   then     codewords, each ceil(n/8) bytes little-endian
///   8 bytes  original payload length in bytes, LE (footer)
/// Each codeword carries floor(k/8) payload bytes; the final block is
/// zero-padded and the footer trims the decoded output.
namespace container {

inline constexpr char kMagic[8] = {'M', 'U', 'S', 'E', 'E', 'N', 'C', '1'};

std::vector<std::uint8_t> encode(std::span<const std::uint8_t> payload, const code::Codec& codec,
                                 std::uint64_t fingerprint);

struct DecodedFile {
    std::vector<std::uint8_t> payload;
    std::vector<eval::InjectLogEntry> sidecar;  // one entry per codeword
    std::uint64_t corrected = 0;
    std::uint64_t uncorrectable = 0;
};

/// Decodes and corrects a container. Throws FormatError on malformed input
/// or fingerprint mismatch.
DecodedFile decode(std::span<const std::uint8_t> file, const code::Codec& codec,
                   std::uint64_t fingerprint);

} // namespace container
} // namespace muse
