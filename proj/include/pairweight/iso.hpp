#pragma once

#include <array>
#include <optional>
#include <utility>

#include "pairweight/code.hpp"
#include "pairweight/criterion.hpp"

namespace pairweight {

// A linear isomorphism between two [n,k] codes over the same field, given
// extensionally: row i of the target generator is the image of row i of the
// source generator. No separate matrix of the map is ever supplied.
struct IsoPair {
    LinearCode source;
    LinearCode target;
};

inline IsoPair make_iso_pair(LinearCode source, LinearCode target) {
    if (!(source.field == target.field)) throw std::invalid_argument("iso: field mismatch");
    if (source.n != target.n || source.k != target.k)
        throw std::invalid_argument("iso: length or dimension mismatch");
    return {std::move(source), std::move(target)};
}

// Whether the pair-weight difference w_p(c) - w_p(phi(c)) is the same for
// every nonzero codeword: true exactly when the per-line sums of the two
// codes differ by a constant. Evaluated sparsely over the union of the two
// span supports; off that union both sums vanish.
struct GapAnalysis {
    bool constant_gap = false;
    std::optional<long long> gap;  // set when constant
    std::optional<std::pair<std::vector<int>, std::vector<int>>> failing_lines;
    std::optional<std::pair<Rational, Rational>> failing_values;
};

inline GapAnalysis gap_analysis(const IsoPair& p) {
    PairSpanProfile src = pair_span_profile(p.source);
    PairSpanProfile dst = pair_span_profile(p.target);
    std::map<Subspace, Rational> diff = src.line_sums;
    for (auto& [line, val] : diff) {
        auto it = dst.line_sums.find(line);
        if (it != dst.line_sums.end()) val -= it->second;
    }
    for (const auto& [line, val] : dst.line_sums)
        if (!diff.count(line)) diff[line] = -val;

    GapAnalysis out;
    Verdict scratch;
    if (detail::sparse_constant(p.source.field, p.source.k, diff, src.pg1_total, scratch)) {
        out.constant_gap = true;
        out.gap = pair_weight(p.source.gen.row(0)) - pair_weight(p.target.gen.row(0));
    } else {
        out.constant_gap = false;
        if (scratch.witness_lines) out.failing_lines = *scratch.witness_lines;
        if (scratch.witness_values) out.failing_values = *scratch.witness_values;
    }
    return out;
}

// Does the isomorphism preserve every pair weight? Requires the constant
// gap above, plus one anchor codeword with matching weights: under a
// constant gap a single test point fixes the gap for all codewords, so the
// first generator row suffices.
inline Verdict preserves_pair_weights(const IsoPair& p) {
    GapAnalysis gap = gap_analysis(p);
    Verdict v;
    v.decided_by = "gap-criterion";
    if (!gap.constant_gap) {
        v.answer = Answer::No;
        v.witness_lines = gap.failing_lines;
        v.witness_values = gap.failing_values;
        v.note = "per-line sums of the two codes do not differ by a constant";
        return v;
    }
    if (*gap.gap != 0) {
        v.answer = Answer::No;
        v.note = "constant pair-weight gap of " + std::to_string(*gap.gap) +
                 " on every nonzero codeword";
        return v;
    }
    v.answer = Answer::Yes;
    return v;
}

}  // namespace pairweight
