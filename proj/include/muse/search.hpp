#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <vector>

#include "muse/code_spec.hpp"
#include "muse/wide_uint.hpp"

namespace muse::search {

/// Distinct remainders a valid code must provide for the model:
/// bidirectional -> 2*(n/s)*(2^s-1), unidirectional -> (n/s)*(2^s-1),
/// full_transition -> (n/s)*(3^s-1).
std::uint64_t remainders_needed(unsigned s, unsigned n, code::ErrorModel model);

/// Error values for one flip mask of one symbol under the model (signed,
/// in codeword space, using the member bits' weights 2^position).
std::vector<WideInt> get_err_vals(std::uint32_t err_pattern,
                                  const std::vector<std::uint16_t>& symbol,
                                  code::ErrorModel model);

struct SearchRequest {
    unsigned n = 0;
    unsigned s = 1;
    unsigned rb = 0;
    code::ErrorModel model = code::ErrorModel::bidirectional;
    code::Assignment assignment;  // empty -> sequential
    std::string assignment_label = "sequential";
    bool stop_at_first = false;
    /// Scan Algorithm 1's literal loop bounds (2^rb+1 .. 2^{rb+1}-1) instead
    /// of the m-uses-at-most-rb-bits range (2^{rb-1}+1 .. 2^rb-1).
    bool literal_range = false;
    /// Require cross-direction distinctness too (no +/- aliased pairs).
    /// The published x4 codes do not satisfy this; off by default.
    bool strict_bijective = false;
    unsigned threads = 0;                       // 0 -> hardware concurrency
    std::atomic<std::uint64_t>* progress = nullptr;  // candidates finished
};

struct SearchResult {
    std::vector<std::uint64_t> multipliers;  // ascending
    code::Assignment assignment;
    std::string assignment_label;
    std::uint64_t remainders_required = 0;
    std::uint64_t candidates_scanned = 0;
};

/// Scans odd multiplier candidates in the redundancy budget and keeps those
/// whose symbol-error remainders are collision-free under the model.
SearchResult find_multipliers(const SearchRequest& req);

/// True iff m yields a collision-free remainder set for the assignment/model.
bool multiplier_is_valid(std::uint64_t m, unsigned n, const code::Assignment& assignment,
                         code::ErrorModel model, bool strict_bijective = false);

struct ShuffleFamily {
    std::vector<unsigned> stride_groups = {1, 2, 4};  // grouped-stride interleavings
    unsigned random_partitions = 0;                   // seeded random assignments
    std::uint64_t seed = 1;
};

struct ShuffleSearchResult {
    bool found = false;
    code::Assignment assignment;
    std::string assignment_label;
    std::vector<std::uint64_t> multipliers;
    unsigned assignments_tried = 0;
};

/// Tries assignments from a deterministic family (strides first, then seeded
/// random partitions) and returns the first with a non-empty multiplier list.
ShuffleSearchResult search_shuffles(unsigned n, unsigned s, unsigned rb,
                                    code::ErrorModel model, const ShuffleFamily& family,
                                    unsigned budget);

} // namespace muse::search
