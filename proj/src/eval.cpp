#include "muse/eval.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <thread>
#include <unordered_set>

#include "muse/errors.hpp"
#include "muse/registry.hpp"

namespace muse::eval {

namespace {

std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

} // namespace

Rng Rng::stream(std::uint64_t seed, std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    std::uint64_t s = mix(seed ^ 0x243f6a8885a308d3ull);
    s = mix(s ^ a);
    s = mix(s ^ b);
    s = mix(s ^ c);
    return Rng(s);
}

std::uint64_t Rng::next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    return mix(z);
}

std::uint64_t Rng::below(std::uint64_t bound) {
    std::uint64_t limit = bound * (UINT64_MAX / bound);
    std::uint64_t x;
    do { x = next(); } while (x >= limit);
    return x % bound;
}

WideUint Rng::bits(unsigned nbits) {
    WideUint v;
    for (unsigned filled = 0; filled < nbits; filled += 64) {
        std::uint64_t w = next();
        unsigned take = std::min(64u, nbits - filled);
        if (take < 64) w &= (std::uint64_t{1} << take) - 1;
        v |= WideUint{w} << filled;
    }
    return v;
}

void CellCounts::add(const CellCounts& o) {
    samples += o.samples;
    corrected += o.corrected;
    miscorrected += o.miscorrected;
    silent += o.silent;
    detected_unused += o.detected_unused;
    detected_contradiction += o.detected_contradiction;
    detected_ambiguous += o.detected_ambiguous;
}

double EvalRow::rate_raw() const {
    return counts.samples ? double(counts.detected_unused) / counts.samples : 0.0;
}
double EvalRow::rate_checked() const {
    return counts.samples ? double(counts.detected()) / counts.samples : 0.0;
}
double EvalRow::rate_halfrule() const {
    if (!counts.samples) return 0.0;
    return (double(counts.detected_unused) + 0.5 * double(counts.alias_hits())) / counts.samples;
}
double EvalRow::rate_fig5() const {
    return counts.samples ? 1.0 - double(counts.miscorrected) / counts.samples : 0.0;
}

std::pair<double, double> EvalRow::ci95() const {
    double n = double(counts.samples);
    if (n == 0) return {0.0, 0.0};
    double p = rate_checked();
    const double z = 1.959963985;
    double z2 = z * z;
    double denom = 1 + z2 / n;
    double center = (p + z2 / (2 * n)) / denom;
    double half = z * std::sqrt(p * (1 - p) / n + z2 / (4 * n * n)) / denom;
    return {center - half, center + half};
}

double EvaluationReport::mean_checked() const {
    double s = 0;
    for (const auto& r : rows) s += r.rate_checked();
    return rows.empty() ? 0.0 : s / rows.size();
}
double EvaluationReport::mean_halfrule() const {
    double s = 0;
    for (const auto& r : rows) s += r.rate_halfrule();
    return rows.empty() ? 0.0 : s / rows.size();
}
double EvaluationReport::mean_fig5() const {
    double s = 0;
    for (const auto& r : rows) s += r.rate_fig5();
    return rows.empty() ? 0.0 : s / rows.size();
}

std::string EvaluationReport::to_csv() const {
    std::ostringstream os;
    os << "codec,sweep,weight,samples,corrected,miscorrected,silent,detected_unused,"
          "detected_contradiction,detected_ambiguous,rate_raw,rate_checked,rate_halfrule,"
          "rate_fig5,ci95_low,ci95_high\n";
    char buf[160];
    for (const auto& r : rows) {
        auto [lo, hi] = r.ci95();
        std::snprintf(buf, sizeof buf, "%.6f,%.6f,%.6f,%.6f,%.6f,%.6f", r.rate_raw(),
                      r.rate_checked(), r.rate_halfrule(), r.rate_fig5(), lo, hi);
        os << codec_id << ',' << sweep << ',' << r.weight << ',' << r.counts.samples << ','
           << r.counts.corrected << ',' << r.counts.miscorrected << ',' << r.counts.silent << ','
           << r.counts.detected_unused << ',' << r.counts.detected_contradiction << ','
           << r.counts.detected_ambiguous << ',' << buf << '\n';
    }
    return os.str();
}

namespace {

const code::MuseCodec* as_muse(const code::Codec& c) {
    return dynamic_cast<const code::MuseCodec*>(&c);
}

WideUint random_data(const code::Codec& codec, Rng& rng) {
    if (const auto* mc = as_muse(codec)) {
        if (mc->spec().form == code::Form::non_systematic) {
            WideUint cap = code::data_max(mc->spec());
            unsigned bits = cap.bit_length();
            WideUint d;
            do { d = rng.bits(bits); } while (d > cap);
            return d;
        }
    }
    return rng.bits(codec.data_bits());
}

void classify(const code::Codec& codec, const WideUint& truth_data, const WideUint& corrupted,
              CellCounts& out) {
    code::DecodeResult res = codec.decode(corrupted);
    ++out.samples;
    switch (res.status) {
        case code::DecodeStatus::clean:
            // A nonzero injected error with zero remainder always changes the
            // data, so this bucket is silent unless no fault landed at all.
            if (res.data == truth_data) ++out.corrected;
            else ++out.silent;
            break;
        case code::DecodeStatus::corrected:
        case code::DecodeStatus::miscorrection_risk:
            if (res.data == truth_data) ++out.corrected;
            else ++out.miscorrected;
            break;
        case code::DecodeStatus::detected_uncorrectable:
            switch (res.detail) {
                case code::DecodeDetail::ambiguous: ++out.detected_ambiguous; break;
                case code::DecodeDetail::unused_remainder: ++out.detected_unused; break;
                default: ++out.detected_contradiction; break;
            }
            break;
    }
}

// Deterministic pattern sets: exhaustive lexicographic combinations when the
// space is small enough, otherwise distinct uniform samples drawn from a
// single pregenerated stream.
std::vector<std::vector<std::uint16_t>> make_patterns(unsigned population, unsigned weight,
                                                      std::uint64_t budget, std::uint64_t seed,
                                                      std::uint64_t cell) {
    std::vector<std::vector<std::uint16_t>> out;
    double log_comb = 0;
    for (unsigned i = 0; i < weight; ++i)
        log_comb += std::log2(double(population - i)) - std::log2(double(i + 1));
    bool exhaustive = log_comb <= 40 && [&] {
        // exact count fits and is within budget
        unsigned long long c = 1;
        for (unsigned i = 0; i < weight; ++i) c = c * (population - i) / (i + 1);
        return c <= budget;
    }();

    if (exhaustive) {
        std::vector<std::uint16_t> idx(weight);
        for (unsigned i = 0; i < weight; ++i) idx[i] = std::uint16_t(i);
        while (true) {
            out.push_back(idx);
            int i = int(weight) - 1;
            while (i >= 0 && idx[i] == population - weight + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (unsigned j = i + 1; j < weight; ++j) idx[j] = std::uint16_t(idx[j - 1] + 1);
        }
        return out;
    }

    Rng rng = Rng::stream(seed, 0x9a77e44, cell);
    std::unordered_set<std::uint64_t> seen;
    while (out.size() < budget) {
        std::vector<std::uint16_t> pick;
        std::uint64_t key = 0;
        // Floyd's algorithm for a distinct subset.
        std::unordered_set<std::uint16_t> chosen;
        for (unsigned j = population - weight; j < population; ++j) {
            auto t = std::uint16_t(rng.below(j + 1));
            chosen.insert(chosen.count(t) ? std::uint16_t(j) : t);
        }
        pick.assign(chosen.begin(), chosen.end());
        std::sort(pick.begin(), pick.end());
        for (auto p : pick) key = key * 211 + p + 1;
        if (seen.insert(key).second) out.push_back(std::move(pick));
    }
    return out;
}

template <typename PerPattern>
CellCounts parallel_cell(const std::vector<std::vector<std::uint16_t>>& patterns,
                         unsigned threads, PerPattern fn) {
    if (threads == 0) threads = std::thread::hardware_concurrency();
    if (threads == 0) threads = 1;
    threads = std::min<std::size_t>(threads, patterns.size() ? patterns.size() : 1);
    std::vector<CellCounts> parts(threads);
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&, t] {
            for (std::size_t i = t; i < patterns.size(); i += threads) fn(patterns[i], i, parts[t]);
        });
    for (auto& th : pool) th.join();
    CellCounts total;
    for (const auto& p : parts) total.add(p);
    return total;
}

} // namespace

EvaluationReport run_bit_error_sweep(const CampaignConfig& config) {
    auto codec = make_codec(config.codec_id);
    if (codec->symbol_bits() != 1)
        throw DomainError("bit sweep requires a per-bit (s==1) codec");
    if (config.weights.empty() || config.patterns_per_weight == 0 || config.errors_per_pattern == 0)
        throw DomainError("bit sweep: empty sweep configuration");

    const auto* muse = as_muse(*codec);
    code::DecodeOptions opts{config.mode == ClassificationMode::with_contradiction_check};
    const unsigned n = codec->codeword_bits();

    EvaluationReport report;
    report.codec_id = config.codec_id;
    report.sweep = "bit";
    report.config = config;

    for (std::size_t w = 0; w < config.weights.size(); ++w) {
        unsigned b = config.weights[w];
        if (b == 0 || b > n) throw DomainError("bit sweep: weight out of range");
        auto patterns = make_patterns(n, b, config.patterns_per_weight, config.seed, w);

        CellCounts counts = parallel_cell(
            patterns, config.threads,
            [&](const std::vector<std::uint16_t>& bits, std::size_t pi, CellCounts& out) {
                for (std::uint64_t e = 0; e < config.errors_per_pattern; ++e) {
                    Rng rng = Rng::stream(config.seed, w, pi, e);
                    WideUint data = random_data(*codec, rng);
                    WideUint cw = codec->encode(data);
                    WideUint corrupted = cw;
                    for (std::uint16_t bit : bits)
                        corrupted.set_bit(bit, !cw.bit(bit));
                    if (muse) {
                        code::DecodeResult res = muse->decode(corrupted, opts);
                        ++out.samples;
                        if (res.status == code::DecodeStatus::clean)
                            res.data == data ? ++out.corrected : ++out.silent;
                        else if (res.status == code::DecodeStatus::detected_uncorrectable) {
                            if (res.detail == code::DecodeDetail::ambiguous) ++out.detected_ambiguous;
                            else if (res.detail == code::DecodeDetail::unused_remainder) ++out.detected_unused;
                            else ++out.detected_contradiction;
                        } else
                            res.data == data ? ++out.corrected : ++out.miscorrected;
                    } else {
                        classify(*codec, data, corrupted, out);
                    }
                }
            });
        report.rows.push_back({b, counts});
    }
    return report;
}

EvaluationReport run_symbol_error_sweep(const CampaignConfig& config) {
    auto codec = make_codec(config.codec_id);
    if (codec->symbol_bits() < 2)
        throw DomainError("symbol sweep requires a symbol (s>1) codec");
    if (config.weights.empty() || config.patterns_per_weight == 0 || config.errors_per_pattern == 0)
        throw DomainError("symbol sweep: empty sweep configuration");

    const auto* muse = as_muse(*codec);
    bool unidirectional =
        muse && muse->spec().error_model == code::ErrorModel::unidirectional_0to1;
    const unsigned s = codec->symbol_bits();
    const unsigned nsym = codec->symbol_count();

    EvaluationReport report;
    report.codec_id = config.codec_id;
    report.sweep = "symbol";
    report.config = config;

    for (std::size_t w = 0; w < config.weights.size(); ++w) {
        unsigned k = config.weights[w];
        if (k == 0 || k > nsym) throw DomainError("symbol sweep: symbol count out of range");
        auto patterns = make_patterns(nsym, k, config.patterns_per_weight, config.seed, 1000 + w);

        CellCounts counts = parallel_cell(
            patterns, config.threads,
            [&](const std::vector<std::uint16_t>& symbols, std::size_t pi, CellCounts& out) {
                for (std::uint64_t e = 0; e < config.errors_per_pattern; ++e) {
                    Rng rng = Rng::stream(config.seed, 1000 + w, pi, e);
                    WideUint data = random_data(*codec, rng);
                    WideUint cw = codec->encode(data);
                    WideUint corrupted = cw;
                    bool degenerate = false;
                    for (std::uint16_t sym : symbols) {
                        auto members = codec->symbol_members(sym);
                        std::uint32_t v = 0;
                        for (unsigned t = 0; t < s; ++t)
                            if (cw.bit(members[t])) v |= 1u << t;
                        std::uint32_t vp;
                        if (unidirectional) {
                            std::uint32_t zeros = ~v & ((1u << s) - 1);
                            if (zeros == 0) { degenerate = true; break; }
                            std::uint32_t flip;
                            do {
                                flip = std::uint32_t(rng.below((1u << s) - 1)) + 1;
                            } while ((flip & zeros) != flip);
                            vp = v | flip;
                        } else {
                            std::uint32_t r = std::uint32_t(rng.below((1u << s) - 1));
                            vp = r >= v ? r + 1 : r;
                        }
                        std::uint32_t diff = v ^ vp;
                        for (unsigned t = 0; t < s; ++t)
                            if (diff >> t & 1u) corrupted.set_bit(members[t], !cw.bit(members[t]));
                    }
                    if (degenerate) continue;  // all-ones symbol cannot take a 0->1 fault
                    classify(*codec, data, corrupted, out);
                }
            });
        report.rows.push_back({k, counts});
    }
    return report;
}

InjectReport inject_into_image(std::span<const std::uint8_t> image, const code::Codec& codec,
                               const FaultModel& model, std::uint64_t seed) {
    const unsigned payload = codec.data_bits() / 8;
    if (payload == 0) throw DomainError("inject: codec payload smaller than a byte");

    InjectReport report;
    const std::uint64_t blocks = (image.size() + payload - 1) / payload;
    report.codewords = blocks;
    report.decoded.reserve(blocks * payload);

    const auto* muse = as_muse(codec);
    bool unidirectional =
        muse && muse->spec().error_model == code::ErrorModel::unidirectional_0to1;
    const unsigned s = codec.symbol_bits();

    for (std::uint64_t bi = 0; bi < blocks; ++bi) {
        WideUint data;
        for (unsigned j = 0; j < payload; ++j) {
            std::size_t off = bi * payload + j;
            std::uint64_t byte = off < image.size() ? image[off] : 0;  // zero-padded tail
            data |= WideUint{byte} << (8 * j);
        }
        WideUint cw = codec.encode(data);
        WideUint corrupted = cw;
        Rng rng = Rng::stream(seed, 0x1a6e, bi);

        for (unsigned f = 0; f < model.bits_per_codeword; ++f) {
            unsigned bit = unsigned(rng.below(codec.codeword_bits()));
            corrupted.set_bit(bit, !corrupted.bit(bit));
        }
        if (model.symbols_per_codeword) {
            std::vector<std::uint16_t> syms;
            while (syms.size() < model.symbols_per_codeword) {
                auto c = std::uint16_t(rng.below(codec.symbol_count()));
                if (std::find(syms.begin(), syms.end(), c) == syms.end()) syms.push_back(c);
            }
            for (std::uint16_t sym : syms) {
                auto members = codec.symbol_members(sym);
                std::uint32_t v = 0;
                for (unsigned t = 0; t < s; ++t)
                    if (corrupted.bit(members[t])) v |= 1u << t;
                std::uint32_t vp;
                if (unidirectional) {
                    std::uint32_t zeros = ~v & ((1u << s) - 1);
                    if (zeros == 0) continue;
                    std::uint32_t flip;
                    do {
                        flip = std::uint32_t(rng.below((1u << s) - 1)) + 1;
                    } while ((flip & zeros) != flip);
                    vp = v | flip;
                } else {
                    std::uint32_t r = std::uint32_t(rng.below((1u << s) - 1));
                    vp = r >= v ? r + 1 : r;
                }
                std::uint32_t diff = v ^ vp;
                for (unsigned t = 0; t < s; ++t)
                    if (diff >> t & 1u) corrupted.set_bit(members[t], !corrupted.bit(members[t]));
            }
        }

        code::DecodeResult res = codec.decode(corrupted);
        if (corrupted == cw) {
            ++report.counts.samples;
            if (res.status == code::DecodeStatus::clean && res.data == data)
                ++report.counts.corrected;
            else
                ++report.counts.miscorrected;  // clean word must decode clean
        } else {
            classify(codec, data, corrupted, report.counts);
        }

        bool ok = (res.status == code::DecodeStatus::clean ||
                   res.status == code::DecodeStatus::corrected) &&
                  res.data == data;
        if (res.status != code::DecodeStatus::clean || !ok)
            report.log.push_back({bi, res.status, res.detail, ok});

        WideUint out_data =
            res.status == code::DecodeStatus::detected_uncorrectable ? WideUint{} : res.data;
        for (unsigned j = 0; j < payload; ++j)
            report.decoded.push_back(std::uint8_t((out_data >> (8 * j)).limb(0) & 0xff));
    }

    report.decoded.resize(image.size());
    report.roundtrip_ok = std::equal(image.begin(), image.end(), report.decoded.begin());
    return report;
}

} // namespace muse::eval
