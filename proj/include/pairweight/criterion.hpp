#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pairweight/code.hpp"
#include "pairweight/combinat.hpp"
#include "pairweight/errors.hpp"
#include "pairweight/rational.hpp"

namespace pairweight {

// Bucket counts of the spans of consecutive generator columns: mg[V] is the
// number of cyclic positions j with <G_j, G_{j+1}> = V. The counts always
// total n, and every key has dimension at most 2.
using MgMap = std::map<Subspace, long long>;

inline MgMap compute_mg(const LinearCode& c) {
    MgMap mg;
    for (int j = 0; j < c.n; ++j) {
        Subspace s = span_of_pair(c.field, c.column(j), c.column((j + 1) % c.n));
        ++mg[s];
    }
    return mg;
}

// Accumulated bucket mass inside u: the number of positions whose column
// pair span lies in u.
inline long long theta_g(const Field& f, const MgMap& mg, const Subspace& u) {
    long long total = 0;
    for (const auto& [v, count] : mg)
        if (subspace_leq(f, v, u)) total += count;
    return total;
}

inline long long theta_g(const LinearCode& c, const Subspace& u) {
    return theta_g(c.field, compute_mg(c), u);
}

// Pair weight of the subcode encoded from the message subspace dtilde,
// evaluated without touching any codeword: n minus the bucket mass inside
// the orthogonal complement of dtilde.
inline int pair_weight_theta(const LinearCode& c, const MgMap& mg, const Subspace& dtilde) {
    return c.n - static_cast<int>(theta_g(c.field, mg, orthogonal_complement(c.field, dtilde)));
}

inline int pair_weight_theta(const LinearCode& c, const Subspace& dtilde) {
    return pair_weight_theta(c, compute_mg(c), dtilde);
}

// The per-line sums f_i = sum over positions j with line inside S_j of
// q^(-dim S_j), where S_j is the span of columns j and j+1. Only lines that
// actually lie inside some S_j can have a nonzero sum, so the map covers
// exactly that set T (of size at most n(q+1)) and every line outside it is
// implicitly zero. This is the cheap evaluation path: the number of lines
// touched never depends on q^k.
struct PairSpanProfile {
    std::vector<Subspace> spans;             // S_j for j = 0..n-1
    std::map<Subspace, Rational> line_sums;  // f restricted to T
    long long pg1_total = 0;                 // number of lines of F_q^k
};

inline PairSpanProfile pair_span_profile(const LinearCode& c) {
    PairSpanProfile prof;
    prof.pg1_total = gaussian_binomial(1, c.k, c.field.q());
    prof.spans.reserve(c.n);
    for (int j = 0; j < c.n; ++j)
        prof.spans.push_back(span_of_pair(c.field, c.column(j), c.column((j + 1) % c.n)));
    for (const Subspace& s : prof.spans) {
        if (s.dim() == 0) continue;
        Rational term(1, int_pow(c.field.q(), s.dim()));
        for (Subspace& line : lines_of(c.field, s)) prof.line_sums[std::move(line)] += term;
    }
    return prof;
}

// Full sequence of line sums indexed by enumerate_pg(1, k). Intended for
// reporting at desk scale; the decision procedures use the sparse profile.
inline std::vector<Rational> omega_sums(const LinearCode& c) {
    constexpr long long kGuard = 1000000;
    if (gaussian_binomial(1, c.k, c.field.q()) > kGuard)
        throw guard_error("omega_sums: line count exceeds the 10^6 guard");
    PairSpanProfile prof = pair_span_profile(c);
    std::vector<Rational> out;
    for (const Subspace& line : enumerate_pg(c.field, 1, c.k)) {
        auto it = prof.line_sums.find(line);
        out.push_back(it == prof.line_sums.end() ? Rational(0) : it->second);
    }
    return out;
}

enum class Answer { Yes, No, Indeterminate };

inline std::string answer_to_string(Answer a) {
    switch (a) {
        case Answer::Yes: return "YES";
        case Answer::No: return "NO";
        default: return "INDETERMINATE";
    }
}

// Decision result: the answer, the rule that produced it, and (for NO) a
// witness pair of lines whose sums differ, or a codeword-level witness.
struct Verdict {
    Answer answer = Answer::Indeterminate;
    std::string decided_by;
    std::optional<int> common_weight;
    std::optional<std::pair<std::vector<int>, std::vector<int>>> witness_lines;
    std::optional<std::pair<Rational, Rational>> witness_values;
    std::optional<std::string> note;
};

namespace detail {

// First normalized vector of F_q^k that is not a key of the given map;
// exists whenever the map covers fewer than all lines.
inline std::vector<int> first_line_outside(const Field& f, int k,
                                           const std::map<Subspace, Rational>& cover) {
    NormalizedVectorGen gen(f, k);
    while (auto v = gen.next()) {
        if (!cover.count(span_of_vector(f, *v))) return *v;
    }
    throw consistency_fault("first_line_outside: cover already spans every line");
}

// Decides whether a sparse line-valued function (zero off its support) is
// constant across all pg1_total lines; fills a witness on failure.
inline bool sparse_constant(const Field& f, int k, const std::map<Subspace, Rational>& values,
                            long long pg1_total, Verdict& verdict) {
    if (values.empty()) return true;  // identically zero
    auto it = values.begin();
    const Rational& first = it->second;
    for (auto jt = std::next(it); jt != values.end(); ++jt) {
        if (jt->second != first) {
            verdict.witness_lines = {it->first.basis.row(0), jt->first.basis.row(0)};
            verdict.witness_values = {first, jt->second};
            return false;
        }
    }
    bool covers_all = static_cast<long long>(values.size()) == pg1_total;
    if (!covers_all && !first.is_zero()) {
        verdict.witness_lines = {it->first.basis.row(0), first_line_outside(f, k, values)};
        verdict.witness_values = {first, Rational(0)};
        return false;
    }
    return true;
}

}  // namespace detail

// Is every nonzero codeword of the same pair weight? Decided exactly from
// the line sums of the column-pair spans: the code is pair equiweight
// precisely when the sums agree on every line of the message space.
inline Verdict is_pair_equiweight(const LinearCode& c) {
    Verdict v;
    if (c.k == 1) {
        v.answer = Answer::Yes;
        v.decided_by = "single-line-message-space";
        v.common_weight = pair_weight(encode(c, {1}));
        return v;
    }
    PairSpanProfile prof = pair_span_profile(c);
    if (detail::sparse_constant(c.field, c.k, prof.line_sums, prof.pg1_total, v)) {
        v.answer = Answer::Yes;
        v.decided_by = "line-sum-criterion";
        std::vector<int> rep = prof.line_sums.empty()
                                   ? std::vector<int>{}
                                   : prof.line_sums.begin()->first.basis.row(0);
        if (rep.empty()) {
            NormalizedVectorGen gen(c.field, c.k);
            rep = *gen.next();
        }
        v.common_weight = pair_weight_theta(c, span_of_vector(c.field, rep));
        return v;
    }
    v.answer = Answer::No;
    v.decided_by = "line-sum-criterion";
    return v;
}

// Whether the bucket counts are constant across all subspaces of the given
// dimension, treating missing keys as zero.
inline bool mg_constant_on_dim(const Field& f, int k, const MgMap& mg, int dim,
                               std::optional<std::pair<Subspace, Subspace>>* witness = nullptr) {
    long long total = gaussian_binomial(dim, k, f.q());
    const Subspace* first_key = nullptr;
    long long first_value = -1;
    long long covered = 0;
    for (const auto& [s, count] : mg) {
        if (s.dim() != dim) continue;
        ++covered;
        if (first_value < 0) {
            first_value = count;
            first_key = &s;
            continue;
        }
        if (count != first_value) {
            if (witness) *witness = {*first_key, s};
            return false;
        }
    }
    if (first_value < 0) return true;  // identically zero
    if (covered < total && first_value != 0) {
        if (witness && dim == 1) {
            // a line with no bucket mass serves as the zero-valued side
            NormalizedVectorGen gen(f, k);
            while (auto v = gen.next()) {
                Subspace line = span_of_vector(f, *v);
                if (!mg.count(line)) {
                    *witness = {*first_key, line};
                    break;
                }
            }
        } else if (witness) {
            *witness = {*first_key, *first_key};
        }
        return false;
    }
    return true;
}

// Equiweight verdict from bucket-count constancy. Applies only to k >= 3
// and only when the counts are constant across planes; when that hypothesis
// fails the rule abstains.
inline Verdict mg_constancy_verdict(const LinearCode& c) {
    Verdict v;
    if (c.k < 3) {
        v.answer = Answer::Indeterminate;
        v.decided_by = "mg-constancy";
        v.note = "rule requires k >= 3";
        return v;
    }
    MgMap mg = compute_mg(c);
    if (!mg_constant_on_dim(c.field, c.k, mg, 2)) {
        v.answer = Answer::Indeterminate;
        v.decided_by = "mg-constancy";
        v.note = "bucket counts are not constant on planes; rule does not apply";
        return v;
    }
    std::optional<std::pair<Subspace, Subspace>> witness;
    bool line_const = mg_constant_on_dim(c.field, c.k, mg, 1, &witness);
    v.answer = line_const ? Answer::Yes : Answer::No;
    v.decided_by = "mg-constancy";
    if (line_const) {
        NormalizedVectorGen gen(c.field, c.k);
        v.common_weight = pair_weight_theta(c, mg, span_of_vector(c.field, *gen.next()));
    } else if (witness) {
        v.witness_lines = {witness->first.basis.row(0), witness->second.basis.row(0)};
    }
    return v;
}

// The necessary-condition sums for r-equiweight: for each line, the
// weighted bucket mass over all spans through it, with the weight
// n_{k-r-dim V, k-1-dim V} / q^(dim V). Zero off the span support.
inline std::map<Subspace, Rational> r_equiweight_necessary_sums(const LinearCode& c, int r,
                                                                const MgMap& mg) {
    long long q = c.field.q();
    std::map<Subspace, Rational> sums;
    int s_cap = std::min(2, c.k - r);
    for (const auto& [v, count] : mg) {
        int d = v.dim();
        if (d < 1 || d > s_cap) continue;
        Rational term = Rational(gaussian_binomial(c.k - r - d, c.k - 1 - d, q) * count,
                                 int_pow(q, d));
        for (Subspace& line : lines_of(c.field, v)) sums[std::move(line)] += term;
    }
    return sums;
}

// The sufficient-condition values for 2 <= r <= k-2: for every plane, its
// own bucket count plus the scaled sum of the bucket counts of its lines.
inline std::vector<Rational> r_equiweight_sufficient_values(const LinearCode& c, int r,
                                                            const MgMap& mg) {
    constexpr long long kGuard = 1000000;
    long long q = c.field.q();
    if (gaussian_binomial(2, c.k, q) > kGuard)
        throw guard_error("r_equiweight_sufficient_values: plane count exceeds the 10^6 guard");
    Rational scale(1, gaussian_binomial(1, c.k - r - 1, q));
    std::vector<Rational> out;
    for (const Subspace& plane : enumerate_pg(c.field, 2, c.k)) {
        Rational val = 0;
        auto it = mg.find(plane);
        if (it != mg.end()) val += it->second;
        Rational inner = 0;
        for (const auto& [v, count] : mg)
            if (v.dim() == 1 && subspace_leq(c.field, v, plane)) inner += count;
        out.push_back(val + inner * scale);
    }
    return out;
}

// Decision pipeline for pair r-equiweight, 1 <= r <= k-1. The boundary
// ranks are decided exactly; in between, a failed necessary condition gives
// NO, a satisfied sufficient condition gives YES, and otherwise the result
// is INDETERMINATE (callers may fall back to the brute-force oracle).
inline Verdict r_equiweight_analysis(const LinearCode& c, int r) {
    if (c.k < 2) throw std::invalid_argument("r_equiweight_analysis: need k >= 2");
    if (r < 1 || r > c.k - 1) throw std::invalid_argument("r_equiweight_analysis: need 1 <= r <= k-1");
    if (r == c.k - 1) {
        MgMap mg = compute_mg(c);
        std::optional<std::pair<Subspace, Subspace>> witness;
        Verdict v;
        v.decided_by = "mg-line-constancy";
        if (mg_constant_on_dim(c.field, c.k, mg, 1, &witness)) {
            v.answer = Answer::Yes;
            // common weight of (k-1)-dimensional subcodes, via the
            // complement identity: the complement of a line is (k-1)-dim
            NormalizedVectorGen gen(c.field, c.k);
            v.common_weight = c.n - static_cast<int>(theta_g(c.field, mg, span_of_vector(c.field, *gen.next())));
        } else {
            v.answer = Answer::No;
            if (witness) v.witness_lines = {witness->first.basis.row(0), witness->second.basis.row(0)};
        }
        return v;
    }
    if (r == 1) return is_pair_equiweight(c);

    MgMap mg = compute_mg(c);
    Verdict v;
    auto necessary = r_equiweight_necessary_sums(c, r, mg);
    if (!detail::sparse_constant(c.field, c.k, necessary, gaussian_binomial(1, c.k, c.field.q()), v)) {
        v.answer = Answer::No;
        v.decided_by = "necessary-sum-mismatch";
        return v;
    }
    auto sufficient = r_equiweight_sufficient_values(c, r, mg);
    bool suff_const = true;
    for (const Rational& val : sufficient)
        if (val != sufficient.front()) {
            suff_const = false;
            break;
        }
    if (suff_const) {
        v.answer = Answer::Yes;
        v.decided_by = "plane-sum-sufficient";
        FqMatrix first_r(r, c.k);
        for (int i = 0; i < r; ++i) first_r.at(i, i) = 1;
        v.common_weight = pair_weight_theta(c, mg, Subspace{c.k, std::move(first_r)});
        return v;
    }
    v.answer = Answer::Indeterminate;
    v.decided_by = "criteria-inconclusive";
    v.note = "necessary sums constant but sufficient plane sums are not";
    return v;
}

}  // namespace pairweight
