#pragma once

#include <memory>
#include <string>
#include <vector>

#include "muse/codec.hpp"

namespace muse {

/// Built-in code definitions and codec construction by id.
///
/// MUSE codes (parameters from the multiplier search over each budget):
///   muse7264     MUSE(72,64)   m=243   s=1 sequential bidirectional, non-systematic
///   muse7264sys  same code in systematic form
///   muse144133   MUSE(144,133) m=2005  s=4 sequential bidirectional, systematic
///   muse8070     MUSE(80,70)   m=1005  s=4 sequential bidirectional, systematic
///   muse8067     MUSE(80,67)   m=5621  s=8 stride-interleaved unidirectional, systematic
/// Baselines:
///   hamming7264, hamming7265, rs144128, rs8064, rs4032
std::vector<std::string> builtin_codec_ids();

bool is_builtin_codec(const std::string& id);

std::unique_ptr<code::Codec> make_codec(const std::string& id);

/// Spec for a built-in MUSE id (throws DomainError for baseline ids).
code::CodeSpec builtin_muse_spec(const std::string& id);

} // namespace muse
