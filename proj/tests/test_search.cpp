#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>

#include "muse/elt.hpp"
#include "muse/search.hpp"
#include "muse/wide_uint.hpp"

using namespace muse;
using code::ErrorModel;
using search::find_multipliers;
using search::remainders_needed;
using search::SearchRequest;

namespace {

std::set<std::int64_t> small_values(const std::vector<WideInt>& vals) {
    std::set<std::int64_t> out;
    for (const auto& v : vals) {
        std::int64_t mag = std::int64_t(v.magnitude().to_u64());
        out.insert(v.negative() ? -mag : mag);
    }
    return out;
}

// Brute-force oracle: enumerate every symbol transition v -> v', compute the
// codeword-space error value, reduce with schoolbook wide division, and
// require that within each direction class (value sign) equal remainders
// only ever come from equal error values. Only feasible for tiny codes.
bool oracle_valid(std::uint64_t m, unsigned n, unsigned s, ErrorModel model) {
    auto assign = code::sequential_assignment(n, s);
    std::map<std::uint64_t, std::string> pos, neg;
    for (const auto& sym : assign) {
        for (std::uint32_t v = 0; v < (1u << s); ++v) {
            for (std::uint32_t vp = 0; vp < (1u << s); ++vp) {
                if (v == vp) continue;
                if (model == ErrorModel::unidirectional_0to1 && (v & vp) != v) continue;
                WideInt e;
                for (unsigned t = 0; t < s; ++t) {
                    int db = int(vp >> t & 1u) - int(v >> t & 1u);
                    if (db) e += WideInt::from_pow2(sym[t], db);
                }
                std::uint64_t r = e.magnitude().divmod(WideUint{m}).remainder.to_u64();
                if (e.negative() && r != 0) r = m - r;
                if (r == 0) return false;
                auto& side = e.negative() ? neg : pos;
                auto [it, inserted] = side.emplace(r, e.to_decimal());
                if (!inserted && it->second != e.to_decimal()) return false;
            }
        }
    }
    return true;
}

} // namespace

TEST_CASE("remainders_needed formulas") {
    CHECK(remainders_needed(4, 144, ErrorModel::bidirectional) == 1080);
    CHECK(remainders_needed(1, 72, ErrorModel::bidirectional) == 144);
    CHECK(remainders_needed(8, 80, ErrorModel::unidirectional_0to1) == 2550);
    CHECK(remainders_needed(4, 144, ErrorModel::full_transition) == 36 * 80);
    CHECK_THROWS_AS(remainders_needed(5, 72, ErrorModel::bidirectional), muse::DomainError);
}

TEST_CASE("get_err_vals toy examples") {
    // Sequential two-bit symbol: values collapse into +/-1..3.
    std::set<std::int64_t> seq_union;
    for (std::uint32_t p = 1; p < 4; ++p)
        for (auto v : small_values(search::get_err_vals(p, {0, 1}, ErrorModel::bidirectional)))
            seq_union.insert(v);
    CHECK(seq_union == std::set<std::int64_t>{1, 2, 3, -1, -2, -3});

    // Shuffled symbol (0,3): uniform-direction values 1, 8, 9 and negatives.
    std::set<std::int64_t> shuf_union;
    for (std::uint32_t p = 1; p < 4; ++p)
        for (auto v : small_values(search::get_err_vals(p, {0, 3}, ErrorModel::bidirectional)))
            shuf_union.insert(v);
    CHECK(shuf_union == std::set<std::int64_t>{1, 8, 9, -1, -8, -9});

    // Single set bit, unidirectional: one value +2^i.
    auto uni = search::get_err_vals(0b100, {5, 6, 7}, ErrorModel::unidirectional_0to1);
    REQUIRE(uni.size() == 1);
    CHECK(uni[0] == WideInt{128});

    // full_transition on (0,3) adds the mixed-direction values +/-7.
    std::set<std::int64_t> full_union;
    for (std::uint32_t p = 1; p < 4; ++p)
        for (auto v : small_values(search::get_err_vals(p, {0, 3}, ErrorModel::full_transition)))
            full_union.insert(v);
    CHECK(full_union == std::set<std::int64_t>{1, 8, 9, 7, -1, -8, -9, -7});
}

TEST_CASE("toy shuffle overlap example") {
    // n=4, s=2 with symbols (0,3) and (2,1): positive value ranges [1,9] and
    // [2,6] share the range 2..6, unlike the disjoint sequential ranges.
    std::set<std::int64_t> s0, s1;
    for (std::uint32_t p = 1; p < 4; ++p) {
        for (auto v : small_values(search::get_err_vals(p, {0, 3}, ErrorModel::bidirectional)))
            if (v > 0) s0.insert(v);
        for (auto v : small_values(search::get_err_vals(p, {2, 1}, ErrorModel::bidirectional)))
            if (v > 0) s1.insert(v);
    }
    CHECK(*s0.begin() == 1);
    CHECK(*s0.rbegin() == 9);
    CHECK(*s1.begin() == 2);
    CHECK(*s1.rbegin() == 6);
    CHECK(*s1.begin() < *s0.rbegin());  // overlapping, not monotone ranges
}

TEST_CASE("find_multipliers reproduces the published codes") {
    SearchRequest req;
    req.n = 72;
    req.s = 1;
    req.rb = 8;
    auto r72 = find_multipliers(req);
    CHECK(std::count(r72.multipliers.begin(), r72.multipliers.end(), 243) == 1);
    CHECK(r72.remainders_required == 144);
    CHECK(r72.candidates_scanned == 64);  // odd m in [129, 255]

    req = {};
    req.n = 144;
    req.s = 4;
    req.rb = 11;
    auto r144 = find_multipliers(req);
    CHECK(std::count(r144.multipliers.begin(), r144.multipliers.end(), 2005) == 1);

    req = {};
    req.n = 80;
    req.s = 4;
    req.rb = 10;
    auto r80 = find_multipliers(req);
    CHECK(std::count(r80.multipliers.begin(), r80.multipliers.end(), 1005) == 1);

    // Validity replay: every returned multiplier builds a collision-free table.
    for (std::uint64_t m : r144.multipliers) {
        code::CodeSpec s;
        s.name = "replay";
        s.n = 144;
        s.k = 144 - 11;
        s.rb = 11;
        s.m = m;
        s.symbol_size = 4;
        s.form = code::Form::systematic;
        s.bit_assignment = code::sequential_assignment(144, 4);
        CHECK_NOTHROW(code::ErrorLookupTable::build(s));
    }
}

TEST_CASE("unidirectional x8 search: sequential fails, the stride succeeds") {
    SearchRequest req;
    req.n = 80;
    req.s = 8;
    req.rb = 13;
    req.model = ErrorModel::unidirectional_0to1;
    auto seq = find_multipliers(req);
    CHECK(seq.multipliers.empty());

    req.assignment = code::stride_assignment(80, 8, 1);
    req.assignment_label = "stride-g1";
    auto strided = find_multipliers(req);
    CHECK(strided.multipliers == std::vector<std::uint64_t>{5621});
}

TEST_CASE("search_shuffles recovers the x8 code from the stride family") {
    search::ShuffleFamily family;
    family.stride_groups = {1, 2, 4};
    family.random_partitions = 2;
    family.seed = 99;
    auto out = search::search_shuffles(80, 8, 13, ErrorModel::unidirectional_0to1, family, 8);
    REQUIRE(out.found);
    CHECK(out.assignment_label == "stride-g1");
    CHECK(std::count(out.multipliers.begin(), out.multipliers.end(), 5621) == 1);
    CHECK(out.assignment == code::stride_assignment(80, 8, 1));

    // s == 1: the stride family degenerates to the sequential assignment.
    CHECK(code::stride_assignment(72, 1, 1) == code::sequential_assignment(72, 1));
}

TEST_CASE("search agrees with the brute-force oracle on tiny codes") {
    for (auto [n, s, rb] : {std::tuple<unsigned, unsigned, unsigned>{8, 2, 4},
                            {12, 2, 5},
                            {16, 2, 6},
                            {12, 1, 5}}) {
        SearchRequest req;
        req.n = n;
        req.s = s;
        req.rb = rb;
        auto got = find_multipliers(req);
        std::vector<std::uint64_t> expect;
        for (std::uint64_t m = (1ull << (rb - 1)) + 1; m < (1ull << rb); m += 2)
            if (oracle_valid(m, n, s, ErrorModel::bidirectional)) expect.push_back(m);
        CHECK(got.multipliers == expect);
    }
}

TEST_CASE("frozen oracle results for tiny searches") {
    SearchRequest req;
    req.n = 16;
    req.s = 2;
    req.rb = 6;
    CHECK(find_multipliers(req).multipliers == std::vector<std::uint64_t>{41, 49, 53, 55, 57});
    req = {};
    req.n = 12;
    req.s = 1;
    req.rb = 5;
    CHECK(find_multipliers(req).multipliers == std::vector<std::uint64_t>{19, 25, 27, 29});
}

TEST_CASE("validity is monotone across stop modes and models") {
    SearchRequest req;
    req.n = 72;
    req.s = 1;
    req.rb = 8;
    auto all = find_multipliers(req);
    req.stop_at_first = true;
    auto first = find_multipliers(req);
    REQUIRE(!all.multipliers.empty());
    REQUIRE(first.multipliers.size() == 1);
    CHECK(first.multipliers[0] == all.multipliers[0]);

    // Strict cross-direction distinctness only shrinks the result set, and
    // anything valid bidirectionally stays valid unidirectionally.
    req.stop_at_first = false;
    req.strict_bijective = true;
    auto strict = find_multipliers(req);
    for (std::uint64_t m : strict.multipliers)
        CHECK(std::count(all.multipliers.begin(), all.multipliers.end(), m) == 1);
    CHECK(strict.multipliers.size() < all.multipliers.size());
    CHECK(std::count(strict.multipliers.begin(), strict.multipliers.end(), 243) == 1);

    for (std::uint64_t m : all.multipliers)
        CHECK(search::multiplier_is_valid(m, 72, code::sequential_assignment(72, 1),
                                          ErrorModel::unidirectional_0to1));
}

TEST_CASE("deterministic results under different worker counts") {
    SearchRequest req;
    req.n = 144;
    req.s = 4;
    req.rb = 11;
    req.threads = 1;
    auto a = find_multipliers(req);
    req.threads = 7;
    auto b = find_multipliers(req);
    CHECK(a.multipliers == b.multipliers);
    CHECK(a.candidates_scanned == b.candidates_scanned);
}

TEST_CASE("literal Algorithm-1 range is available behind the flag") {
    SearchRequest req;
    req.n = 72;
    req.s = 1;
    req.rb = 8;
    req.literal_range = true;
    auto r = find_multipliers(req);
    CHECK(r.candidates_scanned == 128);  // odd m in [257, 511]
    for (std::uint64_t m : r.multipliers) CHECK(m > 256);
}

TEST_CASE("invalid requests throw") {
    SearchRequest req;
    req.n = 72;
    req.s = 5;
    req.rb = 8;
    CHECK_THROWS_AS(find_multipliers(req), muse::DomainError);
    req = {};
    req.n = 72;
    req.s = 1;
    req.rb = 0;
    CHECK_THROWS_AS(find_multipliers(req), muse::DomainError);
}
