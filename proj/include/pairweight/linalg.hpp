#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pairweight/errors.hpp"
#include "pairweight/field.hpp"

namespace pairweight {

// Dense row-major matrix of field element codes. Field context is passed to
// the operations, not stored, so matrices stay plain comparable values.
struct FqMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<int> data;

    FqMatrix() = default;
    FqMatrix(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * c, 0) {}
    FqMatrix(int r, int c, std::vector<int> entries) : rows(r), cols(c), data(std::move(entries)) {
        if (data.size() != static_cast<size_t>(r) * c)
            throw std::invalid_argument("matrix: entry count does not match shape");
    }

    int& at(int r, int c) { return data[static_cast<size_t>(r) * cols + c]; }
    int at(int r, int c) const { return data[static_cast<size_t>(r) * cols + c]; }

    std::vector<int> row(int r) const {
        return {data.begin() + static_cast<long>(r) * cols, data.begin() + static_cast<long>(r + 1) * cols};
    }
    std::vector<int> col(int c) const {
        std::vector<int> out(rows);
        for (int r = 0; r < rows; ++r) out[r] = at(r, c);
        return out;
    }

    static FqMatrix identity(int n) {
        FqMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    static FqMatrix from_rows(const std::vector<std::vector<int>>& rows_in) {
        if (rows_in.empty()) return {};
        FqMatrix m(static_cast<int>(rows_in.size()), static_cast<int>(rows_in[0].size()));
        for (size_t r = 0; r < rows_in.size(); ++r) {
            if (rows_in[r].size() != rows_in[0].size())
                throw std::invalid_argument("matrix: ragged rows");
            for (size_t c = 0; c < rows_in[r].size(); ++c) m.at(static_cast<int>(r), static_cast<int>(c)) = rows_in[r][c];
        }
        return m;
    }

    friend bool operator==(const FqMatrix&, const FqMatrix&) = default;
    friend auto operator<=>(const FqMatrix&, const FqMatrix&) = default;
};

struct RrefResult {
    FqMatrix mat;
    int rank = 0;
    std::vector<int> pivots;
};

// Gauss-Jordan to reduced row echelon form. Deterministic: the pivot is the
// first row at or below the working row with a nonzero entry in the column.
inline RrefResult rref(const Field& f, FqMatrix m) {
    int r = 0;
    std::vector<int> pivots;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int pr = -1;
        for (int i = r; i < m.rows; ++i)
            if (m.at(i, c) != 0) { pr = i; break; }
        if (pr < 0) continue;
        if (pr != r)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(pr, j), m.at(r, j));
        int scale = f.inv(m.at(r, c));
        for (int j = 0; j < m.cols; ++j) m.at(r, j) = f.mul(m.at(r, j), scale);
        for (int i = 0; i < m.rows; ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            int factor = m.at(i, c);
            for (int j = 0; j < m.cols; ++j)
                m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), r, std::move(pivots)};
}

inline int rank_of(const Field& f, const FqMatrix& m) { return rref(f, m).rank; }

inline FqMatrix mat_mul(const Field& f, const FqMatrix& a, const FqMatrix& b) {
    if (a.cols != b.rows) throw std::invalid_argument("matrix: shape mismatch in product");
    FqMatrix out(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int l = 0; l < a.cols; ++l) {
            int v = a.at(i, l);
            if (v == 0) continue;
            for (int j = 0; j < b.cols; ++j)
                if (b.at(l, j) != 0) out.at(i, j) = f.add(out.at(i, j), f.mul(v, b.at(l, j)));
        }
    return out;
}

// Row vector times matrix.
inline std::vector<int> vec_mat(const Field& f, const std::vector<int>& v, const FqMatrix& m) {
    if (static_cast<int>(v.size()) != m.rows) throw std::invalid_argument("matrix: vector length mismatch");
    std::vector<int> out(m.cols, 0);
    for (int i = 0; i < m.rows; ++i) {
        if (v[i] == 0) continue;
        for (int j = 0; j < m.cols; ++j)
            if (m.at(i, j) != 0) out[j] = f.add(out[j], f.mul(v[i], m.at(i, j)));
    }
    return out;
}

// Basis of { x : m x^T = 0 }, returned in canonical reduced form.
inline FqMatrix kernel_basis(const Field& f, const FqMatrix& m) {
    RrefResult red = rref(f, m);
    std::vector<bool> is_pivot(m.cols, false);
    for (int c : red.pivots) is_pivot[c] = true;
    std::vector<std::vector<int>> rows;
    for (int c = 0; c < m.cols; ++c) {
        if (is_pivot[c]) continue;
        std::vector<int> x(m.cols, 0);
        x[c] = 1;
        for (int i = 0; i < red.rank; ++i) x[red.pivots[i]] = f.neg(red.mat.at(i, c));
        rows.push_back(std::move(x));
    }
    if (rows.empty()) return FqMatrix(0, m.cols);
    return rref(f, FqMatrix::from_rows(rows)).mat;
}

// A subspace of F_q^k held by its unique RREF basis (no zero rows). Two
// Subspace values are equal exactly when they are the same subspace, and
// the derived ordering is a fixed total order used for map keys and for
// the deterministic enumeration order.
struct Subspace {
    int ambient = 0;
    FqMatrix basis;  // dim x ambient, reduced, full rank

    int dim() const { return basis.rows; }

    friend bool operator==(const Subspace&, const Subspace&) = default;
    friend auto operator<=>(const Subspace&, const Subspace&) = default;
};

inline Subspace zero_subspace(int ambient) { return {ambient, FqMatrix(0, ambient)}; }

inline Subspace full_space(int ambient) { return {ambient, FqMatrix::identity(ambient)}; }

inline Subspace make_subspace(const Field& f, const FqMatrix& spanning_rows) {
    RrefResult red = rref(f, spanning_rows);
    FqMatrix basis(red.rank, spanning_rows.cols);
    std::copy(red.mat.data.begin(), red.mat.data.begin() + static_cast<long>(red.rank) * spanning_rows.cols,
              basis.data.begin());
    return {spanning_rows.cols, std::move(basis)};
}

inline Subspace span_of_vector(const Field& f, const std::vector<int>& v) {
    return make_subspace(f, FqMatrix::from_rows({v}));
}

inline Subspace span_of_pair(const Field& f, const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("span_of_pair: length mismatch");
    return make_subspace(f, FqMatrix::from_rows({a, b}));
}

// True when every basis row of v lies in the row space of w.
inline bool subspace_leq(const Field& f, const Subspace& v, const Subspace& w) {
    if (v.ambient != w.ambient) throw std::invalid_argument("subspace_leq: ambient mismatch");
    if (v.dim() > w.dim()) return false;
    if (v.dim() == 0) return true;
    FqMatrix stacked(w.dim() + v.dim(), w.ambient);
    std::copy(w.basis.data.begin(), w.basis.data.end(), stacked.data.begin());
    std::copy(v.basis.data.begin(), v.basis.data.end(),
              stacked.data.begin() + static_cast<long>(w.dim()) * w.ambient);
    return rank_of(f, stacked) == w.dim();
}

inline bool contains_vector(const Field& f, const Subspace& w, const std::vector<int>& v) {
    bool zero = std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
    if (zero) return true;
    return subspace_leq(f, span_of_vector(f, v), w);
}

// Orthogonal complement under the standard inner product sum(v_i * w_i).
inline Subspace orthogonal_complement(const Field& f, const Subspace& v) {
    return {v.ambient, kernel_basis(f, v.basis)};
}

// Emits all vectors of F_q^m whose first nonzero entry is 1, one per line
// of F_q^m, in ascending lexicographic order.
class NormalizedVectorGen {
public:
    NormalizedVectorGen(const Field& f, int m) : f_(&f), m_(m), pivot_(m - 1) {
        if (m_ >= 1) {
            current_.assign(m_, 0);
            current_[pivot_] = 1;
            done_ = false;
        }
    }

    std::optional<std::vector<int>> next() {
        if (done_) return std::nullopt;
        std::vector<int> out = current_;
        advance();
        return out;
    }

private:
    void advance() {
        // odometer over the suffix after the pivot
        for (int i = m_ - 1; i > pivot_; --i) {
            if (current_[i] + 1 < f_->q()) {
                ++current_[i];
                return;
            }
            current_[i] = 0;
        }
        --pivot_;
        if (pivot_ < 0) {
            done_ = true;
            return;
        }
        std::fill(current_.begin(), current_.end(), 0);
        current_[pivot_] = 1;
    }

    const Field* f_;
    int m_;
    int pivot_;
    std::vector<int> current_;
    bool done_ = true;
};

// Representatives of the lines of a subspace: each returned vector is the
// normalized spanning vector of one 1-dimensional subspace of s.
inline std::vector<std::vector<int>> line_representatives(const Field& f, const Subspace& s) {
    std::vector<std::vector<int>> out;
    if (s.dim() == 0) return out;
    NormalizedVectorGen gen(f, s.dim());
    while (auto coeffs = gen.next()) {
        std::vector<int> v = vec_mat(f, *coeffs, s.basis);
        // normalize so the first nonzero ambient coordinate is 1
        for (int x : v) {
            if (x != 0) {
                int scale = f.inv(x);
                for (int& y : v) y = f.mul(y, scale);
                break;
            }
        }
        out.push_back(std::move(v));
    }
    return out;
}

inline std::vector<Subspace> lines_of(const Field& f, const Subspace& s) {
    std::vector<Subspace> out;
    for (auto& v : line_representatives(f, s)) out.push_back(span_of_vector(f, v));
    return out;
}

// All r-dimensional subspaces of F_q^k, ordered lexicographically by the
// entries of the canonical basis. Generates each RREF shape exactly once:
// pick the pivot columns, then run an odometer over the free entries.
inline std::vector<Subspace> enumerate_pg(const Field& f, int r, int k) {
    if (r < 0 || r > k) throw std::invalid_argument("enumerate_pg: need 0 <= r <= k");
    std::vector<Subspace> out;
    if (r == 0) {
        out.push_back(zero_subspace(k));
        return out;
    }
    std::vector<int> piv(r);
    for (int i = 0; i < r; ++i) piv[i] = i;
    auto next_combination = [&]() -> bool {
        int i = r - 1;
        while (i >= 0 && piv[i] == k - r + i) --i;
        if (i < 0) return false;
        ++piv[i];
        for (int j = i + 1; j < r; ++j) piv[j] = piv[j - 1] + 1;
        return true;
    };
    do {
        std::vector<bool> is_piv(k, false);
        for (int c : piv) is_piv[c] = true;
        std::vector<std::pair<int, int>> free_pos;  // (row, col)
        for (int i = 0; i < r; ++i)
            for (int c = piv[i] + 1; c < k; ++c)
                if (!is_piv[c]) free_pos.emplace_back(i, c);
        std::vector<int> vals(free_pos.size(), 0);
        while (true) {
            FqMatrix m(r, k);
            for (int i = 0; i < r; ++i) m.at(i, piv[i]) = 1;
            for (size_t t = 0; t < free_pos.size(); ++t) m.at(free_pos[t].first, free_pos[t].second) = vals[t];
            out.push_back(Subspace{k, std::move(m)});
            size_t t = free_pos.size();
            while (t > 0 && vals[t - 1] + 1 == f.q()) vals[--t] = 0;
            if (t == 0) break;
            ++vals[t - 1];
        }
    } while (next_combination());
    std::sort(out.begin(), out.end());
    return out;
}

inline std::string vector_to_string(const std::vector<int>& v) {
    std::string s = "<";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(v[i]);
    }
    s += '>';
    return s;
}

inline std::string subspace_to_string(const Subspace& s) {
    if (s.dim() == 0) return "{0}";
    std::string out = "[";
    for (int r = 0; r < s.dim(); ++r) {
        if (r) out += "; ";
        for (int c = 0; c < s.ambient; ++c) {
            if (c) out += ' ';
            out += std::to_string(s.basis.at(r, c));
        }
    }
    out += "]";
    return out;
}

}  // namespace pairweight
