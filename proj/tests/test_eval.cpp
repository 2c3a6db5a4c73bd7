#include "doctest.h"

#include <cstdint>

#include "muse/eval.hpp"
#include "muse/registry.hpp"

using namespace muse;
using eval::CampaignConfig;
using eval::run_bit_error_sweep;
using eval::run_symbol_error_sweep;

TEST_CASE("rng streams are stable and bounded draws unbiased-ish") {
    auto a = eval::Rng::stream(1, 2, 3, 4);
    auto b = eval::Rng::stream(1, 2, 3, 4);
    for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
    auto c = eval::Rng::stream(1, 2, 3, 5);
    CHECK(eval::Rng::stream(1, 2, 3, 4).next() != c.next());
    auto r = eval::Rng::stream(9, 9);
    for (int i = 0; i < 1000; ++i) CHECK(r.below(7) < 7);
    CHECK(eval::Rng::stream(4, 4).bits(72).bit_length() <= 72);
}

TEST_CASE("weight-1 errors are always corrected") {
    for (const char* id : {"muse7264", "hamming7264", "hamming7265"}) {
        CampaignConfig cfg;
        cfg.codec_id = id;
        cfg.weights = {1};
        cfg.patterns_per_weight = 72;  // exhaustive singles
        cfg.errors_per_pattern = 50;
        cfg.seed = 5;
        auto rep = run_bit_error_sweep(cfg);
        REQUIRE(rep.rows.size() == 1);
        CHECK(rep.rows[0].counts.corrected == rep.rows[0].counts.samples);
    }
}

TEST_CASE("campaign determinism under varying worker counts") {
    CampaignConfig cfg;
    cfg.codec_id = "muse7264";
    cfg.weights = {2, 3};
    cfg.patterns_per_weight = 300;
    cfg.errors_per_pattern = 20;
    cfg.seed = 77;
    cfg.threads = 1;
    auto a = run_bit_error_sweep(cfg);
    cfg.threads = 5;
    auto b = run_bit_error_sweep(cfg);
    CHECK(a.to_csv() == b.to_csv());

    CampaignConfig sc;
    sc.codec_id = "muse144133";
    sc.weights = {2};
    sc.patterns_per_weight = 100;
    sc.errors_per_pattern = 30;
    sc.seed = 78;
    sc.threads = 1;
    auto c = run_symbol_error_sweep(sc);
    sc.threads = 6;
    auto d = run_symbol_error_sweep(sc);
    CHECK(c.to_csv() == d.to_csv());
}

TEST_CASE("exhaustive and sampled estimates agree within the interval") {
    CampaignConfig cfg;
    cfg.codec_id = "muse7264";
    cfg.weights = {2};
    cfg.errors_per_pattern = 40;
    cfg.seed = 11;
    cfg.patterns_per_weight = 3000;  // >= C(72,2): exhaustive
    auto ex = run_bit_error_sweep(cfg);
    cfg.patterns_per_weight = 700;  // sampled without replacement
    cfg.seed = 12;
    auto sm = run_bit_error_sweep(cfg);
    auto [lo, hi] = sm.rows[0].ci95();
    CHECK(ex.rows[0].rate_checked() >= lo - 0.01);
    CHECK(ex.rows[0].rate_checked() <= hi + 0.01);
}

TEST_CASE("classification buckets sum to the sample count") {
    CampaignConfig cfg;
    cfg.codec_id = "muse144133";
    cfg.weights = {2, 3};
    cfg.patterns_per_weight = 80;
    cfg.errors_per_pattern = 25;
    cfg.seed = 13;
    auto rep = run_symbol_error_sweep(cfg);
    for (const auto& row : rep.rows) {
        const auto& c = row.counts;
        CHECK(c.samples == c.corrected + c.miscorrected + c.silent + c.detected());
        CHECK(row.rate_checked() >= 0.0);
        CHECK(row.rate_checked() <= 1.0);
        auto [lo, hi] = row.ci95();
        CHECK(lo <= row.rate_checked());
        CHECK(hi >= row.rate_checked());
    }
}

TEST_CASE("csv output is deterministic and well-formed") {
    CampaignConfig cfg;
    cfg.codec_id = "rs4032";
    cfg.weights = {2};
    cfg.patterns_per_weight = 45;
    cfg.errors_per_pattern = 10;
    cfg.seed = 3;
    auto rep = run_symbol_error_sweep(cfg);
    std::string csv = rep.to_csv();
    CHECK(csv.find("codec,sweep,weight,samples") == 0);
    CHECK(csv.find("rs4032,symbol,2,") != std::string::npos);
    CHECK(rep.to_csv() == csv);
}

TEST_CASE("image injection: no faults round-trips bit-exactly") {
    std::vector<std::uint8_t> image(4096);
    for (std::size_t i = 0; i < image.size(); ++i) image[i] = std::uint8_t(i * 37 + 11);
    for (const char* id : {"muse7264", "muse144133", "muse8067", "hamming7264", "rs8064"}) {
        auto codec = make_codec(id);
        auto rep = eval::inject_into_image(image, *codec, {}, 1);
        CHECK(rep.roundtrip_ok);
        CHECK(rep.counts.corrected == rep.counts.samples);
        CHECK(rep.log.empty());
    }
}

TEST_CASE("image injection: single-bit fault per codeword is always repaired") {
    std::vector<std::uint8_t> image(8192, 0xA5);
    for (const char* id : {"muse7264", "hamming7264"}) {
        auto codec = make_codec(id);
        eval::FaultModel fm;
        fm.bits_per_codeword = 1;
        auto rep = eval::inject_into_image(image, *codec, fm, 9);
        CHECK(rep.roundtrip_ok);
        CHECK(rep.counts.corrected == rep.counts.samples);
    }
    // On the x4 codes even a single-bit error can land on an aliased
    // remainder (its partner is a multi-bit symbol entry) and come back
    // ambiguous-detected; it must never be wrong or silent.
    for (const char* id : {"muse144133", "muse8070"}) {
        auto codec = make_codec(id);
        eval::FaultModel fm;
        fm.bits_per_codeword = 1;
        auto rep = eval::inject_into_image(image, *codec, fm, 9);
        CHECK(rep.counts.miscorrected == 0);
        CHECK(rep.counts.silent == 0);
        CHECK(rep.counts.corrected + rep.counts.detected_ambiguous == rep.counts.samples);
        CHECK(double(rep.counts.corrected) / rep.counts.samples > 0.9);
    }
}

TEST_CASE("image injection: single-symbol fault per codeword") {
    std::vector<std::uint8_t> image(8192);
    for (std::size_t i = 0; i < image.size(); ++i) image[i] = std::uint8_t(i >> 3);

    // Unidirectional stride code: every symbol fault is repaired.
    {
        auto codec = make_codec("muse8067");
        eval::FaultModel fm;
        fm.symbols_per_codeword = 1;
        auto rep = eval::inject_into_image(image, *codec, fm, 10);
        CHECK(rep.roundtrip_ok);
        CHECK(rep.counts.corrected == rep.counts.samples);
    }
    // x4 codes: aliased pairs make a small share ambiguous-detected; nothing
    // may be wrong or silent.
    for (const char* id : {"muse144133", "muse8070"}) {
        auto codec = make_codec(id);
        eval::FaultModel fm;
        fm.symbols_per_codeword = 1;
        auto rep = eval::inject_into_image(image, *codec, fm, 10);
        CHECK(rep.counts.miscorrected == 0);
        CHECK(rep.counts.silent == 0);
        CHECK(rep.counts.corrected + rep.counts.detected_ambiguous == rep.counts.samples);
        CHECK(double(rep.counts.corrected) / rep.counts.samples > 0.8);
    }
    // RS single-symbol: always corrected.
    {
        auto codec = make_codec("rs144128");
        eval::FaultModel fm;
        fm.symbols_per_codeword = 1;
        auto rep = eval::inject_into_image(image, *codec, fm, 10);
        CHECK(rep.roundtrip_ok);
    }
}

TEST_CASE("image injection agrees with the symbol sweep (cross-oracle)") {
    std::vector<std::uint8_t> image(16 * 4000);
    for (std::size_t i = 0; i < image.size(); ++i) image[i] = std::uint8_t(i * 131 + 7);
    auto codec = make_codec("muse144133");
    eval::FaultModel fm;
    fm.symbols_per_codeword = 2;
    auto inj = eval::inject_into_image(image, *codec, fm, 21);

    CampaignConfig cfg;
    cfg.codec_id = "muse144133";
    cfg.weights = {2};
    cfg.patterns_per_weight = 630;
    cfg.errors_per_pattern = 100;
    cfg.seed = 22;
    auto sweep = run_symbol_error_sweep(cfg);

    double inj_rate = double(inj.counts.detected()) / inj.counts.samples;
    double sweep_rate = sweep.rows[0].rate_checked();
    CHECK(inj_rate == doctest::Approx(sweep_rate).epsilon(0.05));
}

TEST_CASE("invalid campaign configurations throw") {
    CampaignConfig cfg;
    cfg.codec_id = "muse7264";
    cfg.weights = {100};
    CHECK_THROWS_AS(run_bit_error_sweep(cfg), muse::DomainError);
    cfg.weights = {};
    CHECK_THROWS_AS(run_bit_error_sweep(cfg), muse::DomainError);
    cfg.codec_id = "muse144133";
    cfg.weights = {2};
    CHECK_THROWS_AS(run_bit_error_sweep(cfg), muse::DomainError);  // s != 1
    cfg.codec_id = "muse7264";
    CHECK_THROWS_AS(run_symbol_error_sweep(cfg), muse::DomainError);  // s == 1
}
