#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "muse/codec.hpp"

namespace muse::eval {

/// Counter-keyed splitmix64 stream; items draw independent streams from the
/// master seed, so campaign results do not depend on worker count or order.
class Rng {
public:
    static Rng stream(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0,
                      std::uint64_t c = 0);

    std::uint64_t next();
    std::uint64_t below(std::uint64_t bound);  // unbiased, bound >= 1
    WideUint bits(unsigned nbits);

private:
    explicit Rng(std::uint64_t state) : state_(state) {}
    std::uint64_t state_;
};

enum class ClassificationMode { raw_alias, with_contradiction_check };

struct CampaignConfig {
    std::string codec_id;
    std::vector<unsigned> weights;  // bit counts or symbol counts per error
    std::uint64_t patterns_per_weight = 2000;
    std::uint64_t errors_per_pattern = 200;
    std::uint64_t seed = 1;
    ClassificationMode mode = ClassificationMode::with_contradiction_check;
    unsigned threads = 0;  // 0 -> hardware concurrency
};

struct CellCounts {
    std::uint64_t samples = 0;
    std::uint64_t corrected = 0;      // decoder corrected and matched the truth
    std::uint64_t miscorrected = 0;   // decoder "corrected" to the wrong data
    std::uint64_t silent = 0;         // decoder reported clean on a corrupted word
    std::uint64_t detected_unused = 0;         // remainder/syndrome hit nothing
    std::uint64_t detected_contradiction = 0;  // containment/direction check fired
    std::uint64_t detected_ambiguous = 0;      // two aliased candidates plausible

    void add(const CellCounts& o);
    std::uint64_t detected() const {
        return detected_unused + detected_contradiction + detected_ambiguous;
    }
    std::uint64_t alias_hits() const {  // errors whose remainder hit the lookup table
        return samples - silent - detected_unused;
    }
};

struct EvalRow {
    unsigned weight = 0;
    CellCounts counts;

    double rate_raw() const;       // unused-remainder/syndrome detections only
    double rate_checked() const;   // + contradiction and ambiguity detections
    double rate_halfrule() const;  // raw + half of lookup-table hits (paper accounting)
    double rate_fig5() const;      // 1 - miscorrection rate (syndrome-not-in-matrix rule)
    /// Wilson 95% interval for rate_checked.
    std::pair<double, double> ci95() const;
};

struct EvaluationReport {
    std::string codec_id;
    std::string sweep;  // "bit" or "symbol"
    CampaignConfig config;
    std::vector<EvalRow> rows;

    std::string to_csv() const;
    double mean_checked() const;
    double mean_halfrule() const;
    double mean_fig5() const;
};

/// Per-weight multi-bit error injection for per-bit (s==1) codecs.
EvaluationReport run_bit_error_sweep(const CampaignConfig& config);

/// Per-count multi-symbol error injection for symbol (s>1) codecs.
EvaluationReport run_symbol_error_sweep(const CampaignConfig& config);

struct FaultModel {
    unsigned bits_per_codeword = 0;     // random distinct bit flips
    unsigned symbols_per_codeword = 0;  // random distinct symbol corruptions
};

struct InjectLogEntry {
    std::uint64_t index = 0;
    code::DecodeStatus status = code::DecodeStatus::clean;
    code::DecodeDetail detail = code::DecodeDetail::none;
    bool data_ok = false;
};

struct InjectReport {
    std::uint64_t codewords = 0;
    CellCounts counts;       // cross-check of decode results vs ground truth
    bool roundtrip_ok = false;  // decoded payload equals the original image
    std::vector<std::uint8_t> decoded;
    std::vector<InjectLogEntry> log;  // non-clean entries only
};

/// Encodes an image into codewords, injects faults per the model, decodes,
/// and cross-checks every result against the known injection.
InjectReport inject_into_image(std::span<const std::uint8_t> image, const code::Codec& codec,
                               const FaultModel& model, std::uint64_t seed);

} // namespace muse::eval
