#pragma once

#include <algorithm>
#include <vector>

#include "pairweight/errors.hpp"
#include "pairweight/field.hpp"
#include "pairweight/linalg.hpp"

namespace pairweight {

// An [n,k] linear code over GF(q), held by a full-rank k x n generator
// matrix. Pair weights here follow the cyclic convention throughout: the
// pair at position i is (x_i, x_{i+1 mod n}), including the wrap-around
// pair (x_{n-1}, x_0). Lengths below 2 are rejected because the pair
// metric degenerates there.
struct LinearCode {
    Field field;
    int n = 0;
    int k = 0;
    FqMatrix gen;  // k x n

    std::vector<int> column(int j) const { return gen.col(j); }
};

inline LinearCode make_code(const Field& f, FqMatrix gen) {
    int k = gen.rows, n = gen.cols;
    if (n < 2) throw std::invalid_argument("code: length must be at least 2");
    if (k < 1 || k > n) throw std::invalid_argument("code: need 1 <= k <= n");
    for (int v : gen.data)
        if (!f.in_range(v)) throw std::invalid_argument("code: generator entry out of field range");
    if (rank_of(f, gen) != k) throw std::invalid_argument("code: generator matrix is rank deficient");
    return {f, n, k, std::move(gen)};
}

inline std::vector<int> encode(const LinearCode& c, const std::vector<int>& msg) {
    if (static_cast<int>(msg.size()) != c.k) throw std::invalid_argument("encode: message length mismatch");
    return vec_mat(c.field, msg, c.gen);
}

inline int hamming_weight(const std::vector<int>& word) {
    return static_cast<int>(std::count_if(word.begin(), word.end(), [](int v) { return v != 0; }));
}

inline int pair_weight(const std::vector<int>& word) {
    int n = static_cast<int>(word.size());
    if (n < 2) throw std::invalid_argument("pair_weight: word length must be at least 2");
    int w = 0;
    for (int i = 0; i < n; ++i)
        if (word[i] != 0 || word[(i + 1) % n] != 0) ++w;
    return w;
}

// Positions where some vector of the row space is nonzero. Because the i-th
// coordinate functional is nonzero on a subspace exactly when it is nonzero
// on some basis vector, the union over the given rows suffices.
inline std::vector<int> hamming_support(const FqMatrix& basis_words) {
    std::vector<int> out;
    for (int j = 0; j < basis_words.cols; ++j)
        for (int i = 0; i < basis_words.rows; ++i)
            if (basis_words.at(i, j) != 0) {
                out.push_back(j);
                break;
            }
    return out;
}

// Positions i where some vector of the row space has (x_i, x_{i+1}) != (0,0):
// exactly the positions with i or i+1 (cyclically) in the Hamming support.
inline std::vector<int> pair_support(const FqMatrix& basis_words) {
    int n = basis_words.cols;
    std::vector<bool> hit(n, false);
    for (int j : hamming_support(basis_words)) hit[j] = true;
    std::vector<int> out;
    for (int i = 0; i < n; ++i)
        if (hit[i] || hit[(i + 1) % n]) out.push_back(i);
    return out;
}

// Pair weight of a row space from the run structure of its Hamming support:
// full support gives n, otherwise the support splits into maximal cyclic
// runs of consecutive residues and each run widens by exactly one position.
inline int pair_weight_via_runs(const FqMatrix& basis_words) {
    int n = basis_words.cols;
    if (n < 2) throw std::invalid_argument("pair_weight_via_runs: length must be at least 2");
    std::vector<bool> chi(n, false);
    int wh = 0;
    for (int j : hamming_support(basis_words)) {
        chi[j] = true;
        ++wh;
    }
    if (wh == n) return n;
    int runs = 0;
    for (int i = 0; i < n; ++i)
        if (chi[i] && !chi[(i + n - 1) % n]) ++runs;
    return wh + runs;
}

// The zero coordinates forced by restricting pairs to J: position z must
// vanish whenever some pair index outside J touches it.
inline std::vector<int> forced_zero_positions(int n, const std::vector<int>& j_set) {
    std::vector<bool> in_j(n, false);
    for (int j : j_set) {
        if (j < 0 || j >= n) throw std::invalid_argument("subcode: index outside [0, n)");
        in_j[j] = true;
    }
    std::vector<bool> zero(n, false);
    for (int i = 0; i < n; ++i)
        if (!in_j[i]) {
            zero[i] = true;
            zero[(i + 1) % n] = true;
        }
    std::vector<int> out;
    for (int i = 0; i < n; ++i)
        if (zero[i]) out.push_back(i);
    return out;
}

// Basis (possibly empty) of the subcode whose codewords have zero pairs at
// every position outside J, computed by pulling the coordinate conditions
// back through the generator matrix.
inline FqMatrix subcode_basis(const LinearCode& c, const std::vector<int>& j_set) {
    std::vector<int> zeros = forced_zero_positions(c.n, j_set);
    if (zeros.empty()) return c.gen;
    FqMatrix conditions(static_cast<int>(zeros.size()), c.k);
    for (size_t t = 0; t < zeros.size(); ++t)
        for (int i = 0; i < c.k; ++i) conditions.at(static_cast<int>(t), i) = c.gen.at(i, zeros[t]);
    FqMatrix msgs = kernel_basis(c.field, conditions);
    return mat_mul(c.field, msgs, c.gen);
}

inline int subcode_dim(const LinearCode& c, const std::vector<int>& j_set) {
    std::vector<int> zeros = forced_zero_positions(c.n, j_set);
    if (zeros.empty()) return c.k;
    FqMatrix cols(c.k, static_cast<int>(zeros.size()));
    for (size_t t = 0; t < zeros.size(); ++t)
        for (int i = 0; i < c.k; ++i) cols.at(i, static_cast<int>(t)) = c.gen.at(i, zeros[t]);
    return c.k - rank_of(c.field, cols);
}

// The [2n,k] code that interleaves a zero column after every column of G.
// Every codeword picks up pair weight exactly twice its Hamming weight.
inline LinearCode hat_code(const LinearCode& c) {
    FqMatrix g(c.k, 2 * c.n);
    for (int i = 0; i < c.k; ++i)
        for (int j = 0; j < c.n; ++j) g.at(i, 2 * j) = c.gen.at(i, j);
    return make_code(c.field, std::move(g));
}

inline LinearCode dual_code(const LinearCode& c) {
    if (c.k == c.n) throw std::invalid_argument("dual_code: dual of a full-space code is the zero code");
    FqMatrix h = kernel_basis(c.field, c.gen);
    return make_code(c.field, std::move(h));
}

}  // namespace pairweight
