#pragma once

#include <chrono>
#include <cstdint>
#include <vector>

#include "pairweight/code.hpp"
#include "pairweight/criterion.hpp"
#include "pairweight/errors.hpp"
#include "pairweight/iso.hpp"

namespace pairweight {

// splitmix64: the output sequence is fully specified by the seed, so every
// generated instance reproduces bit-for-bit across platforms and
// implementations. Statistical quality is irrelevant here; determinism is
// the contract.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // value in [0, bound); bound must be positive
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

private:
    std::uint64_t state_;
};

// Uniformly random k x n generator entries, resampled until full rank.
inline LinearCode random_code(const Field& f, int n, int k, std::uint64_t seed) {
    if (n < 2 || k < 1 || k > n) throw std::invalid_argument("random_code: need n >= 2 and 1 <= k <= n");
    SplitMix64 rng(seed);
    while (true) {
        FqMatrix g(k, n);
        for (int& v : g.data) v = static_cast<int>(rng.below(static_cast<std::uint64_t>(f.q())));
        if (rank_of(f, g) == k) return {f, n, k, std::move(g)};
    }
}

namespace detail {

inline bool equiweight_by_enumeration(const LinearCode& c, int r, bool pair_kind) {
    if (r < 1 || r > c.k) throw std::invalid_argument("equiweight oracle: need 1 <= r <= k");
    constexpr long long kGuard = 1000000;
    if (gaussian_binomial(r, c.k, c.field.q()) > kGuard)
        throw guard_error("equiweight oracle: subspace count exceeds the 10^6 guard");
    int first = -1;
    for (const Subspace& w : enumerate_pg(c.field, r, c.k)) {
        FqMatrix words = mat_mul(c.field, w.basis, c.gen);
        int weight = static_cast<int>(pair_kind ? pair_support(words).size()
                                                : hamming_support(words).size());
        if (first < 0)
            first = weight;
        else if (weight != first)
            return false;
    }
    return true;
}

}  // namespace detail

// Ground truth by exhaustive subspace enumeration: every r-dimensional
// subcode has the same pair support size.
inline bool bf_equiweight(const LinearCode& c, int r) {
    return detail::equiweight_by_enumeration(c, r, /*pair_kind=*/true);
}

inline bool bf_hamming_equiweight(const LinearCode& c, int r) {
    return detail::equiweight_by_enumeration(c, r, /*pair_kind=*/false);
}

// Ground truth for weight preservation: compare the pair weights of the two
// encodings of every normalized message.
inline bool bf_iso(const IsoPair& p) {
    long long total = 1;
    for (int i = 0; i < p.source.k; ++i) {
        total *= p.source.field.q();
        if (total > 1000000) throw guard_error("bf_iso: q^k exceeds the 10^6 guard");
    }
    NormalizedVectorGen gen(p.source.field, p.source.k);
    while (auto msg = gen.next()) {
        if (pair_weight(encode(p.source, *msg)) != pair_weight(encode(p.target, *msg))) return false;
    }
    return true;
}

// Head-to-head cost of the two ways to decide pair equiweight: the sparse
// line-sum criterion touches at most n(q+1) lines, while the naive scan
// walks all q^k codewords and takes each pair weight directly.
struct BenchmarkResult {
    long long criterion_work = 0;   // distinct lines examined
    long long bruteforce_work = 0;  // codewords scanned (q^k)
    std::int64_t criterion_ns = 0;
    std::int64_t bruteforce_ns = 0;
    bool criterion_equiweight = false;
    bool bruteforce_equiweight = false;
    bool bruteforce_run = false;
};

inline BenchmarkResult benchmark_equiweight(const LinearCode& c, bool run_bruteforce = true) {
    using clock = std::chrono::steady_clock;
    BenchmarkResult res;

    auto t0 = clock::now();
    Verdict verdict = is_pair_equiweight(c);
    auto t1 = clock::now();
    res.criterion_ns = std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count();
    res.criterion_equiweight = verdict.answer == Answer::Yes;
    res.criterion_work = static_cast<long long>(pair_span_profile(c).line_sums.size());

    long long total = 1;
    for (int i = 0; i < c.k; ++i) total *= c.field.q();
    res.bruteforce_work = total;

    if (!run_bruteforce) return res;
    res.bruteforce_run = true;

    auto t2 = clock::now();
    // odometer over all q^k messages; no scalar-class shortcuts
    std::vector<int> msg(static_cast<size_t>(c.k), 0);
    bool all_equal = true;
    int first = -1;
    for (long long step = 0; step < total; ++step) {
        if (step > 0) {
            int i = c.k - 1;
            while (msg[i] + 1 == c.field.q()) msg[i--] = 0;
            ++msg[i];
        }
        bool zero = true;
        for (int v : msg)
            if (v != 0) {
                zero = false;
                break;
            }
        if (zero) continue;
        int w = pair_weight(encode(c, msg));
        if (first < 0)
            first = w;
        else if (w != first)
            all_equal = false;
    }
    auto t3 = clock::now();
    res.bruteforce_ns = std::chrono::duration_cast<std::chrono::nanoseconds>(t3 - t2).count();
    res.bruteforce_equiweight = all_equal;

    if (res.criterion_equiweight != res.bruteforce_equiweight)
        throw consistency_fault("benchmark_equiweight: criterion and exhaustive scan disagree");
    return res;
}

}  // namespace pairweight
