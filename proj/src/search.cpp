#include "muse/search.hpp"

#include <algorithm>
#include <thread>

#include "muse/elt.hpp"
#include "muse/errors.hpp"

namespace muse::search {

std::uint64_t remainders_needed(unsigned s, unsigned n, code::ErrorModel model) {
    if (s == 0 || n % s != 0) throw DomainError("remainders_needed: s must divide n");
    std::uint64_t symbols = n / s;
    std::uint64_t per = 0;
    switch (model) {
        case code::ErrorModel::bidirectional: per = 2 * ((1ull << s) - 1); break;
        case code::ErrorModel::unidirectional_0to1: per = (1ull << s) - 1; break;
        case code::ErrorModel::full_transition: {
            std::uint64_t p = 1;
            for (unsigned i = 0; i < s; ++i) p *= 3;
            per = p - 1;
            break;
        }
    }
    return symbols * per;
}

std::vector<WideInt> get_err_vals(std::uint32_t err_pattern,
                                  const std::vector<std::uint16_t>& symbol,
                                  code::ErrorModel model) {
    return code::symbol_error_values(symbol, err_pattern, model);
}

namespace {

// Remainders of one candidate, entirely in 64-bit arithmetic: 2^b mod m is
// precomputed per bit, masks reduce to sums below m * s.
class CandidateChecker {
public:
    CandidateChecker(unsigned n, const code::Assignment& assignment, code::ErrorModel model,
                     bool strict)
        : n_(n), assignment_(assignment), model_(model), strict_(strict), pow2_(n) {}

    bool valid(std::uint64_t m, std::vector<std::uint32_t>& stamp, std::uint32_t& epoch) {
        ++epoch;
        if (stamp.size() < 2 * m) stamp.assign(2 * m, 0);
        pow2_[0] = 1 % m;
        for (unsigned b = 1; b < n_; ++b) {
            pow2_[b] = pow2_[b - 1] * 2;
            if (pow2_[b] >= m) pow2_[b] -= m;
        }
        // stamp slots [0,m): positive-side keys; [m,2m): negative-side keys.
        auto claim = [&](std::uint64_t r, bool negative_side) -> bool {
            if (r == 0) return false;
            std::uint64_t slot = r + (negative_side ? m : 0);
            if (stamp[slot] == epoch) return false;
            stamp[slot] = epoch;
            if (strict_) {
                // No +/- aliasing: the same representative may not be
                // claimed on the opposite side either.
                std::uint64_t mirror = r + (negative_side ? 0 : m);
                if (stamp[mirror] == epoch) return false;
            }
            return true;
        };

        for (const auto& sym : assignment_) {
            const unsigned s = sym.size();
            if (model_ == code::ErrorModel::full_transition) {
                // All per-bit sign combinations; negative values mirror the
                // positive ones, so enumerate signed sums directly.
                for (std::uint32_t mask = 1; mask < (1u << s); ++mask) {
                    unsigned bits[32];
                    unsigned p = 0, top = 0;
                    for (unsigned t = 0; t < s; ++t)
                        if (mask >> t & 1u) {
                            bits[p] = sym[t];
                            if (sym[t] > bits[top]) top = p;
                            ++p;
                        }
                    for (std::uint32_t signs = 0; signs < (1u << p); ++signs) {
                        std::int64_t acc = 0;
                        for (unsigned j = 0; j < p; ++j)
                            acc += (signs >> j & 1u) ? std::int64_t(pow2_[bits[j]])
                                                     : -std::int64_t(pow2_[bits[j]]);
                        std::uint64_t r = std::uint64_t(((acc % std::int64_t(m)) + std::int64_t(m))) % m;
                        // Sign of the exact value = sign of the heaviest term.
                        bool negative = !(signs >> top & 1u);
                        if (!claim(r, negative)) return false;
                    }
                }
            } else {
                for (std::uint32_t mask = 1; mask < (1u << s); ++mask) {
                    std::uint64_t v = 0;
                    for (unsigned t = 0; t < s; ++t)
                        if (mask >> t & 1u) {
                            v += pow2_[sym[t]];
                            if (v >= m) v -= m;
                        }
                    if (!claim(v, false)) return false;
                    if (model_ == code::ErrorModel::bidirectional) {
                        if (!claim(m - v, true)) return false;
                    }
                }
            }
        }
        return true;
    }

private:
    unsigned n_;
    const code::Assignment& assignment_;
    code::ErrorModel model_;
    bool strict_;
    std::vector<std::uint64_t> pow2_;
};

} // namespace

bool multiplier_is_valid(std::uint64_t m, unsigned n, const code::Assignment& assignment,
                         code::ErrorModel model, bool strict_bijective) {
    if (m < 3 || (m & 1) == 0) return false;
    CandidateChecker checker(n, assignment, model, strict_bijective);
    std::vector<std::uint32_t> stamp;
    std::uint32_t epoch = 0;
    return checker.valid(m, stamp, epoch);
}

SearchResult find_multipliers(const SearchRequest& req) {
    if (req.s == 0 || req.n == 0 || req.n % req.s != 0)
        throw DomainError("search: s must divide n");
    if (req.rb == 0 || req.rb > 20) throw DomainError("search: rb must be in [1, 20]");

    code::Assignment assignment =
        req.assignment.empty() ? code::sequential_assignment(req.n, req.s) : req.assignment;
    {
        // The assignment must partition [0, n).
        std::vector<bool> seen(req.n, false);
        for (const auto& sym : assignment) {
            if (sym.size() != req.s) throw DomainError("search: symbol of wrong size");
            for (auto b : sym) {
                if (b >= req.n || seen[b]) throw DomainError("search: assignment is not a partition");
                seen[b] = true;
            }
        }
        if (assignment.size() != req.n / req.s)
            throw DomainError("search: assignment is not a partition");
    }

    std::uint64_t lo, hi;
    if (req.literal_range) {
        lo = (1ull << req.rb) + 1;
        hi = (1ull << (req.rb + 1)) - 1;
    } else {
        lo = req.rb < 2 ? 3 : (1ull << (req.rb - 1)) + 1;
        hi = (1ull << req.rb) - 1;
    }

    SearchResult result;
    result.assignment = assignment;
    result.assignment_label = req.assignment_label;
    result.remainders_required = remainders_needed(req.s, req.n, req.model);

    std::vector<std::uint64_t> candidates;
    for (std::uint64_t m = lo | 1; m <= hi; m += 2) candidates.push_back(m);

    unsigned threads = req.threads ? req.threads : std::thread::hardware_concurrency();
    if (threads == 0) threads = 1;
    threads = std::min<std::size_t>(threads, candidates.size() ? candidates.size() : 1);

    if (req.stop_at_first || threads == 1) {
        CandidateChecker checker(req.n, assignment, req.model, req.strict_bijective);
        std::vector<std::uint32_t> stamp;
        std::uint32_t epoch = 0;
        for (std::uint64_t m : candidates) {
            ++result.candidates_scanned;
            if (req.progress) req.progress->fetch_add(1, std::memory_order_relaxed);
            if (checker.valid(m, stamp, epoch)) {
                result.multipliers.push_back(m);
                if (req.stop_at_first) break;
            }
        }
        return result;
    }

    std::vector<std::vector<std::uint64_t>> found(threads);
    std::vector<std::uint64_t> scanned(threads, 0);
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            CandidateChecker checker(req.n, assignment, req.model, req.strict_bijective);
            std::vector<std::uint32_t> stamp;
            std::uint32_t epoch = 0;
            for (std::size_t i = t; i < candidates.size(); i += threads) {
                ++scanned[t];
                if (checker.valid(candidates[i], stamp, epoch)) found[t].push_back(candidates[i]);
                if (req.progress) req.progress->fetch_add(1, std::memory_order_relaxed);
            }
        });
    }
    for (auto& th : pool) th.join();
    for (unsigned t = 0; t < threads; ++t) {
        result.candidates_scanned += scanned[t];
        result.multipliers.insert(result.multipliers.end(), found[t].begin(), found[t].end());
    }
    std::sort(result.multipliers.begin(), result.multipliers.end());
    return result;
}

namespace {

struct SplitMix {
    std::uint64_t state;
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t bound) {
        // Rejection keeps the draw unbiased and platform-independent.
        std::uint64_t limit = bound * (UINT64_MAX / bound);
        std::uint64_t x;
        do { x = next(); } while (x >= limit);
        return x % bound;
    }
};

code::Assignment random_partition(unsigned n, unsigned s, std::uint64_t seed) {
    std::vector<std::uint16_t> perm(n);
    for (unsigned i = 0; i < n; ++i) perm[i] = std::uint16_t(i);
    SplitMix rng{seed};
    for (unsigned i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(i + 1)]);
    code::Assignment a(n / s);
    for (unsigned i = 0; i < n / s; ++i)
        a[i].assign(perm.begin() + i * s, perm.begin() + (i + 1) * s);
    return a;
}

} // namespace

ShuffleSearchResult search_shuffles(unsigned n, unsigned s, unsigned rb,
                                    code::ErrorModel model, const ShuffleFamily& family,
                                    unsigned budget) {
    if (budget == 0) throw DomainError("search_shuffles: budget must be >= 1");
    ShuffleSearchResult out;

    std::vector<std::pair<code::Assignment, std::string>> todo;
    for (unsigned g : family.stride_groups) {
        if (n % g != 0 || (n / g) % s != 0) continue;
        todo.emplace_back(code::stride_assignment(n, s, g), "stride-g" + std::to_string(g));
    }
    for (unsigned i = 0; i < family.random_partitions; ++i)
        todo.emplace_back(random_partition(n, s, family.seed + i),
                          "random-seed" + std::to_string(family.seed + i));

    for (auto& [assignment, label] : todo) {
        if (out.assignments_tried == budget) break;
        ++out.assignments_tried;
        SearchRequest req;
        req.n = n;
        req.s = s;
        req.rb = rb;
        req.model = model;
        req.assignment = assignment;
        req.assignment_label = label;
        SearchResult r = find_multipliers(req);
        if (!r.multipliers.empty()) {
            out.found = true;
            out.assignment = assignment;
            out.assignment_label = label;
            out.multipliers = r.multipliers;
            return out;
        }
    }
    return out;
}

} // namespace muse::search
