#include "doctest.h"

#include <cstdint>

#include "muse/container.hpp"
#include "muse/eval.hpp"
#include "muse/registry.hpp"
#include "muse/spec_text.hpp"

using namespace muse;

TEST_CASE("spec text round trips for every built-in MUSE code") {
    for (const char* id : {"muse7264", "muse7264sys", "muse144133", "muse8070", "muse8067"}) {
        code::CodeSpec spec = builtin_muse_spec(id);
        std::string text = code::to_text(spec);
        code::CodeSpec back = code::parse_spec_text(text);
        CHECK(back.name == spec.name);
        CHECK(back.n == spec.n);
        CHECK(back.k == spec.k);
        CHECK(back.rb == spec.rb);
        CHECK(back.m == spec.m);
        CHECK(back.symbol_size == spec.symbol_size);
        CHECK(back.error_model == spec.error_model);
        CHECK(back.form == spec.form);
        CHECK(back.bit_assignment == spec.bit_assignment);
        CHECK(code::to_text(back) == text);
        CHECK(code::spec_fingerprint(back) == code::spec_fingerprint(spec));
    }
}

TEST_CASE("spec text renders multipliers in decimal") {
    std::string text = code::to_text(builtin_muse_spec("muse144133"));
    CHECK(text.find("m: 2005") != std::string::npos);
    CHECK(text.find("symbol-size: 4") != std::string::npos);
    CHECK(text.find("S35:") != std::string::npos);
}

TEST_CASE("spec text rejects malformed input") {
    CHECK_THROWS_AS(code::parse_spec_text("nonsense"), FormatError);
    CHECK_THROWS_AS(code::parse_spec_text("muse-code v1\nbogus-key: 3\n"), FormatError);
    // even multiplier fails validation on parse
    std::string text = code::to_text(builtin_muse_spec("muse7264"));
    auto pos = text.find("m: 243");
    text.replace(pos, 6, "m: 244");
    CHECK_THROWS_AS(code::parse_spec_text(text), muse::Error);
}

TEST_CASE("container round trip and corruption reporting") {
    std::vector<std::uint8_t> payload(3000);
    for (std::size_t i = 0; i < payload.size(); ++i) payload[i] = std::uint8_t(i * 17 + 3);

    for (const char* id : {"muse7264", "muse144133", "muse8067"}) {
        code::MuseCodec codec(builtin_muse_spec(id));
        std::uint64_t fp = code::spec_fingerprint(codec.spec());
        auto file = container::encode(payload, codec, fp);
        auto back = container::decode(file, codec, fp);
        CHECK(back.payload == payload);
        CHECK(back.corrected == 0);
        CHECK(back.uncorrectable == 0);

        // single bit flip inside some codeword: still round-trips, corrected
        auto damaged = file;
        damaged[24 + 5] ^= 0x10;
        auto fixed = container::decode(damaged, codec, fp);
        CHECK(fixed.payload == payload);
        CHECK(fixed.corrected == 1);

        // wrong fingerprint is refused
        CHECK_THROWS_AS(container::decode(file, codec, fp ^ 1), FormatError);
    }
}

TEST_CASE("container handles empty payloads and truncation") {
    code::MuseCodec codec(builtin_muse_spec("muse7264"));
    std::uint64_t fp = code::spec_fingerprint(codec.spec());
    std::vector<std::uint8_t> empty;
    auto file = container::encode(empty, codec, fp);
    CHECK(file.size() == 32);
    CHECK(container::decode(file, codec, fp).payload.empty());

    auto truncated = file;
    truncated.pop_back();
    CHECK_THROWS_AS(container::decode(truncated, codec, fp), FormatError);
    CHECK_THROWS_AS(container::decode(std::vector<std::uint8_t>(10), codec, fp), FormatError);
}

TEST_CASE("container flags uncorrectable blocks") {
    code::MuseCodec codec(builtin_muse_spec("muse7264"));
    std::uint64_t fp = code::spec_fingerprint(codec.spec());
    std::vector<std::uint8_t> payload(80, 0x5c);
    auto file = container::encode(payload, codec, fp);
    // Corrupt three bits of the first codeword until it reports uncorrectable.
    eval::Rng rng = eval::Rng::stream(55, 0);
    bool saw_uncorrectable = false;
    for (int attempt = 0; attempt < 200 && !saw_uncorrectable; ++attempt) {
        auto damaged = file;
        for (int f = 0; f < 3; ++f) {
            unsigned bit = unsigned(rng.below(72));
            damaged[24 + bit / 8] ^= std::uint8_t(1u << (bit % 8));
        }
        auto out = container::decode(damaged, codec, fp);
        if (out.uncorrectable) {
            saw_uncorrectable = true;
            CHECK(out.sidecar[0].status == code::DecodeStatus::detected_uncorrectable);
            CHECK(!out.sidecar[0].data_ok);
        }
    }
    CHECK(saw_uncorrectable);
}
