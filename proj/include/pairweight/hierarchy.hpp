#pragma once

#include <string>
#include <vector>

#include "pairweight/code.hpp"
#include "pairweight/combinat.hpp"
#include "pairweight/criterion.hpp"
#include "pairweight/errors.hpp"

namespace pairweight {

enum class WeightKind { Hamming, Pair };

// d^1 .. d^max_r of the chosen weight. The Hamming chain is strictly
// increasing; the pair chain starts at 2 or more, increases strictly up to
// rank k-1 and may stall only at the last step.
struct Hierarchy {
    WeightKind kind = WeightKind::Hamming;
    std::vector<int> values;
};

namespace detail {

inline void validate_hierarchy(const Hierarchy& h, int n, int k) {
    const auto& d = h.values;
    for (size_t i = 0; i < d.size(); ++i) {
        if (d[i] > n) throw consistency_fault("hierarchy: value exceeds the code length");
        if (h.kind == WeightKind::Pair && i == 0 && d[0] < 2)
            throw consistency_fault("hierarchy: first pair value below 2");
        if (h.kind == WeightKind::Hamming && i == 0 && d[0] < 1)
            throw consistency_fault("hierarchy: first value below 1");
        if (i == 0) continue;
        bool last_step = static_cast<int>(i) + 1 == k;
        bool strict = h.kind == WeightKind::Hamming || !last_step;
        if (strict ? d[i] <= d[i - 1] : d[i] < d[i - 1])
            throw consistency_fault("hierarchy: monotonicity violated");
    }
}

inline void check_level_guard(const LinearCode& c, int r) {
    constexpr long long kGuard = 1000000;
    if (gaussian_binomial(r, c.k, c.field.q()) > kGuard)
        throw guard_error("hierarchy: level " + std::to_string(r) + " exceeds the 10^6 subspace guard");
}

}  // namespace detail

// Minimum Hamming support size over the r-dimensional subcodes, for
// r = 1..max_r, by enumerating message-space subspaces.
inline Hierarchy hamming_hierarchy(const LinearCode& c, int max_r) {
    if (max_r < 1 || max_r > c.k) throw std::invalid_argument("hamming_hierarchy: need 1 <= max_r <= k");
    Hierarchy h{WeightKind::Hamming, {}};
    for (int r = 1; r <= max_r; ++r) {
        detail::check_level_guard(c, r);
        int best = c.n + 1;
        for (const Subspace& w : enumerate_pg(c.field, r, c.k)) {
            FqMatrix words = mat_mul(c.field, w.basis, c.gen);
            best = std::min(best, static_cast<int>(hamming_support(words).size()));
        }
        h.values.push_back(best);
    }
    detail::validate_hierarchy(h, c.n, c.k);
    return h;
}

// Minimum pair support size over the r-dimensional subcodes. Every level is
// cross-checked against the bucket-mass complement formula; a mismatch
// would falsify the identity the fast criteria rest on, so it faults.
inline Hierarchy pair_hierarchy(const LinearCode& c, int max_r) {
    if (max_r < 1 || max_r > c.k) throw std::invalid_argument("pair_hierarchy: need 1 <= max_r <= k");
    MgMap mg = compute_mg(c);
    Hierarchy h{WeightKind::Pair, {}};
    for (int r = 1; r <= max_r; ++r) {
        detail::check_level_guard(c, r);
        int best = c.n + 1;
        for (const Subspace& w : enumerate_pg(c.field, r, c.k)) {
            FqMatrix words = mat_mul(c.field, w.basis, c.gen);
            int direct = static_cast<int>(pair_support(words).size());
            if (direct != pair_weight_theta(c, mg, w))
                throw consistency_fault("pair_hierarchy: direct support disagrees with the complement formula");
            best = std::min(best, direct);
        }
        h.values.push_back(best);
    }
    detail::validate_hierarchy(h, c.n, c.k);
    return h;
}

// Length/dimension profile: m_r is the smallest |J| for which the subcode
// restricted to pair positions J reaches dimension r. Growing J by one
// index relaxes two coordinate conditions, so the dimension can jump past
// r; the profile therefore records the first size at which rank r becomes
// reachable. Subsets are visited in ascending size with early exit per
// rank, behind an explicit 2^n enumeration guard.
inline std::vector<int> ldp(const LinearCode& c) {
    if (c.n > 20) throw guard_error("ldp: length exceeds the 2^20 subset guard");
    std::vector<int> m(static_cast<size_t>(c.k) + 1, -1);
    int found = 0;
    for (int size = 0; size <= c.n && found < c.k; ++size) {
        std::vector<int> subset(size);
        for (int i = 0; i < size; ++i) subset[i] = i;
        while (true) {
            int dim = subcode_dim(c, subset);
            for (int r = 1; r <= dim; ++r)
                if (m[r] < 0) {
                    m[r] = size;
                    ++found;
                }
            if (found == c.k) break;
            // next size-combination of {0..n-1}
            int i = size - 1;
            while (i >= 0 && subset[i] == c.n - size + i) --i;
            if (i < 0) break;
            ++subset[i];
            for (int j = i + 1; j < size; ++j) subset[j] = subset[j - 1] + 1;
        }
    }
    for (int r = 1; r <= c.k; ++r)
        if (m[r] < 0) throw consistency_fault("ldp: rank " + std::to_string(r) + " never reached");
    return {m.begin() + 1, m.end()};
}

struct MpdsRow {
    int r = 0;
    int bound = 0;
    int value = 0;
};

// Pair Singleton bound report: each level against n-k+r+1 (and n at the
// top), plus the separability flag d_p^1 == n-k+2.
struct MpdsReport {
    bool is_mpds = false;
    std::vector<MpdsRow> table;
};

inline MpdsReport mpds_report(const LinearCode& c) {
    Hierarchy h = pair_hierarchy(c, c.k);
    MpdsReport rep;
    for (int r = 1; r <= c.k; ++r) {
        int bound = r <= c.k - 1 ? c.n - c.k + r + 1 : c.n;
        int value = h.values[r - 1];
        if (value > bound) throw consistency_fault("mpds_report: pair Singleton bound violated");
        rep.table.push_back({r, bound, value});
    }
    rep.is_mpds = h.values[0] == c.n - c.k + 2;
    return rep;
}

}  // namespace pairweight
