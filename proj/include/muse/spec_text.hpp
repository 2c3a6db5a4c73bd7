#pragma once

#include <cstdint>
#include <string>

#include "muse/code_spec.hpp"

namespace muse::code {

/// Human-readable key/value rendering of a CodeSpec with explicit symbol
/// lists; multipliers in decimal. Stable: parse(to_text(s)) == s.
std::string to_text(const CodeSpec& spec);

CodeSpec parse_spec_text(const std::string& text);

/// FNV-1a 64 over the canonical text; identifies a spec in containers.
std::uint64_t spec_fingerprint(const CodeSpec& spec);

} // namespace muse::code
