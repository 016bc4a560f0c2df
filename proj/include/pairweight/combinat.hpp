#pragma once

#include <limits>
#include <string>
#include <vector>

#include "pairweight/errors.hpp"
#include "pairweight/linalg.hpp"
#include "pairweight/rational.hpp"

namespace pairweight {

// Number of r-dimensional subspaces of F_q^k, via the q-analogue of the
// Pascal recurrence C(k,r) = C(k-1,r-1) + q^r * C(k-1,r). Saturates at
// LLONG_MAX instead of overflowing; every guard comparison in this library
// sits far below the saturation point.
inline long long gaussian_binomial(int r, int k, long long q) {
    if (q < 2) throw std::invalid_argument("gaussian_binomial: q must be at least 2");
    if (r < 0 || r > k) return 0;
    if (r == 0 || r == k) return 1;
    constexpr long long kMax = std::numeric_limits<long long>::max();
    auto sat_mul = [](long long a, long long b) {
        if (a != 0 && b > kMax / a) return kMax;
        return a * b;
    };
    auto sat_add = [](long long a, long long b) {
        if (a > kMax - b) return kMax;
        return a + b;
    };
    std::vector<long long> row(static_cast<size_t>(r) + 1, 0);
    row[0] = 1;
    for (int kk = 1; kk <= k; ++kk) {
        long long qpow = 1;
        int top = std::min(kk, r);
        std::vector<long long> next(row);
        for (int rr = 1; rr <= top; ++rr) {
            qpow = sat_mul(qpow, q);  // q^rr
            next[rr] = sat_add(row[rr - 1], sat_mul(qpow, row[rr]));
            if (rr == kk) next[rr] = 1;
        }
        row = std::move(next);
    }
    return row[r];
}

// Subspace listing with the duality-paired indexing convention: for
// dimensions d with 2d > k, the i-th subspace is the orthogonal complement
// of the i-th subspace of dimension k-d. This makes the line/hyperplane
// incidence matrix symmetric, which the identity suite relies on.
inline std::vector<Subspace> pg_ordered(const Field& f, int d, int k) {
    if (2 * d <= k) return enumerate_pg(f, d, k);
    std::vector<Subspace> base = enumerate_pg(f, k - d, k);
    std::vector<Subspace> out;
    out.reserve(base.size());
    for (const Subspace& s : base) out.push_back(orthogonal_complement(f, s));
    return out;
}

// 0/1 containment matrix between the r- and s-dimensional subspaces of
// F_q^k: entry (i,j) is 1 exactly when the i-th r-space lies inside the
// j-th s-space, indices following pg_ordered.
struct IncidenceMatrix {
    int r = 0, s = 0, k = 0;
    std::vector<Subspace> row_spaces;
    std::vector<Subspace> col_spaces;
    std::vector<std::vector<int>> entries;
};

inline IncidenceMatrix build_incidence(const Field& f, int r, int s, int k) {
    if (!(0 <= r && r <= s && s <= k)) throw std::invalid_argument("build_incidence: need 0 <= r <= s <= k");
    constexpr long long kGuard = 10000;
    if (gaussian_binomial(r, k, f.q()) > kGuard || gaussian_binomial(s, k, f.q()) > kGuard)
        throw guard_error("build_incidence: side exceeds the 10^4 subspace guard");
    IncidenceMatrix t;
    t.r = r;
    t.s = s;
    t.k = k;
    t.row_spaces = pg_ordered(f, r, k);
    t.col_spaces = pg_ordered(f, s, k);
    t.entries.assign(t.row_spaces.size(), std::vector<int>(t.col_spaces.size(), 0));
    for (size_t i = 0; i < t.row_spaces.size(); ++i)
        for (size_t j = 0; j < t.col_spaces.size(); ++j)
            if (subspace_leq(f, t.row_spaces[i], t.col_spaces[j])) t.entries[i][j] = 1;
    return t;
}

// Small dense rational matrix, just enough for the identity suite.
struct RatMatrix {
    int rows = 0, cols = 0;
    std::vector<Rational> data;

    RatMatrix() = default;
    RatMatrix(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * c) {}
    Rational& at(int r, int c) { return data[static_cast<size_t>(r) * cols + c]; }
    const Rational& at(int r, int c) const { return data[static_cast<size_t>(r) * cols + c]; }

    static RatMatrix identity(int n) {
        RatMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }
    static RatMatrix ones(int r, int c) {
        RatMatrix m(r, c);
        for (auto& v : m.data) v = 1;
        return m;
    }
    static RatMatrix from_incidence(const IncidenceMatrix& t) {
        RatMatrix m(static_cast<int>(t.entries.size()),
                    t.entries.empty() ? 0 : static_cast<int>(t.entries[0].size()));
        for (int i = 0; i < m.rows; ++i)
            for (int j = 0; j < m.cols; ++j) m.at(i, j) = t.entries[i][j];
        return m;
    }

    RatMatrix transpose() const {
        RatMatrix m(cols, rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) m.at(j, i) = at(i, j);
        return m;
    }
    RatMatrix scaled(const Rational& c) const {
        RatMatrix m = *this;
        for (auto& v : m.data) v *= c;
        return m;
    }
    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
        if (a.cols != b.rows) throw std::invalid_argument("RatMatrix: shape mismatch");
        RatMatrix out(a.rows, b.cols);
        for (int i = 0; i < a.rows; ++i)
            for (int l = 0; l < a.cols; ++l) {
                if (a.at(i, l).is_zero()) continue;
                for (int j = 0; j < b.cols; ++j)
                    if (!b.at(l, j).is_zero()) out.at(i, j) += a.at(i, l) * b.at(l, j);
            }
        return out;
    }
    friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
        if (a.rows != b.rows || a.cols != b.cols) throw std::invalid_argument("RatMatrix: shape mismatch");
        RatMatrix out = a;
        for (size_t i = 0; i < out.data.size(); ++i) out.data[i] += b.data[i];
        return out;
    }
    friend bool operator==(const RatMatrix&, const RatMatrix&) = default;
};

struct IdentityCheck {
    std::string name;
    bool passed = false;
};

struct IdentityReport {
    std::vector<IdentityCheck> checks;
    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
};

inline long long int_pow(long long base, int exp) {
    long long out = 1;
    for (int i = 0; i < exp; ++i) out *= base;
    return out;
}

// Exact verification of the structural identities of the containment
// matrices: constant column sums, the closed-form inverse and symmetry of
// the line/hyperplane matrix, the two product formulas against the
// all-ones matrix, and the composition rule for chained containment.
inline IdentityReport check_incidence_identities(const Field& f, int k) {
    if (k < 2) throw std::invalid_argument("check_incidence_identities: need k >= 2");
    long long q = f.q();
    IdentityReport report;
    std::vector<std::vector<RatMatrix>> t(static_cast<size_t>(k) + 1,
                                          std::vector<RatMatrix>(static_cast<size_t>(k) + 1));
    for (int r = 0; r <= k; ++r)
        for (int s = r; s <= k; ++s) t[r][s] = RatMatrix::from_incidence(build_incidence(f, r, s, k));

    // (a) each column of T_{r,s} sums to the subspace count n_{r,s}
    {
        bool ok = true;
        for (int r = 0; r <= k && ok; ++r)
            for (int s = r; s <= k && ok; ++s) {
                Rational expect = gaussian_binomial(r, s, q);
                for (int j = 0; j < t[r][s].cols && ok; ++j) {
                    Rational sum = 0;
                    for (int i = 0; i < t[r][s].rows; ++i) sum += t[r][s].at(i, j);
                    ok = sum == expect;
                }
            }
        report.checks.push_back({"column-sums", ok});
    }

    const RatMatrix& lines_hyps = t[1][k - 1];
    int n1k = lines_hyps.rows;
    RatMatrix inv = (lines_hyps +
                     RatMatrix::ones(n1k, n1k).scaled(Rational(-(int_pow(q, k - 2) - 1), int_pow(q, k - 1) - 1)))
                        .scaled(Rational(1, int_pow(q, k - 2)));

    // (b) closed-form inverse and symmetry of the line/hyperplane matrix
    {
        bool ok = lines_hyps * inv == RatMatrix::identity(n1k);
        ok = ok && inv * lines_hyps == RatMatrix::identity(n1k);
        ok = ok && lines_hyps == lines_hyps.transpose();
        // its inverse has constant row sums as well
        Rational first = 0;
        for (int i = 0; i < n1k && ok; ++i) {
            Rational sum = 0;
            for (int j = 0; j < n1k; ++j) sum += inv.at(j, i);
            if (i == 0)
                first = sum;
            else
                ok = sum == first;
        }
        report.checks.push_back({"hyperplane-inverse", ok});
    }

    // (c) both product formulas, for 1 <= r <= k-1
    {
        bool ok = true;
        for (int r = 1; r <= k - 1 && ok; ++r) {
            RatMatrix lhs = t[r][k - 1] * lines_hyps;
            RatMatrix rhs = t[1][r].transpose().scaled(int_pow(q, k - r - 1)) +
                            RatMatrix::ones(t[r][k - 1].rows, n1k)
                                .scaled(Rational(int_pow(q, k - r - 1) - 1, q - 1));
            ok = lhs == rhs;
            if (!ok) break;
            RatMatrix lhs2 = t[r][k - 1] * inv;
            RatMatrix rhs2 = t[1][r].transpose().scaled(Rational(1, int_pow(q, r - 1))) +
                             RatMatrix::ones(t[r][k - 1].rows, n1k)
                                 .scaled(Rational(-(int_pow(q, r - 1) - 1),
                                                  int_pow(q, r - 1) * (int_pow(q, k - 1) - 1)));
            ok = lhs2 == rhs2;
        }
        report.checks.push_back({"hyperplane-products", ok});
    }

    // (d) T_{r,s} T_{s,z} = n_{s-r,z-r} T_{r,z} for 1 <= r <= s <= z <= k
    {
        bool ok = true;
        for (int r = 1; r <= k && ok; ++r)
            for (int s = r; s <= k && ok; ++s)
                for (int z = s; z <= k && ok; ++z)
                    ok = t[r][s] * t[s][z] == t[r][z].scaled(gaussian_binomial(s - r, z - r, q));
        report.checks.push_back({"composition-rule", ok});
    }

    return report;
}

}  // namespace pairweight
