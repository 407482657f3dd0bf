#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "intcx/error.hpp"

namespace intcx {

// Dense matrix over an exact field. Everything below works purely through
// the field object F (see field.hpp), so the same elimination code serves
// rationals and GF(q).
template <class K>
struct Matrix {
    std::size_t rows = 0, cols = 0;
    std::vector<K> a;   // row-major

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

    K& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    const K& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

    Matrix transposed() const {
        Matrix t(cols, rows);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) t.at(c, r) = at(r, c);
        return t;
    }

    static Matrix from_rows(const std::vector<std::vector<K>>& rows_in) {
        Matrix m;
        m.rows = rows_in.size();
        m.cols = rows_in.empty() ? 0 : rows_in.front().size();
        m.a.reserve(m.rows * m.cols);
        for (const auto& r : rows_in) {
            if (r.size() != m.cols) throw error("ragged rows");
            m.a.insert(m.a.end(), r.begin(), r.end());
        }
        return m;
    }
};

namespace detail {

// In-place forward elimination; returns the pivot columns. Pivot choice is
// the first nonzero entry in the column (exact arithmetic, so any nonzero
// pivot is fine).
template <class F>
std::vector<std::size_t> eliminate(const F& f, Matrix<typename F::Value>& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
        std::size_t sel = row;
        while (sel < m.rows && f.is_zero(m.at(sel, col))) ++sel;
        if (sel == m.rows) continue;
        if (sel != row)
            for (std::size_t c = col; c < m.cols; ++c) std::swap(m.at(sel, c), m.at(row, c));
        const auto pivot = m.at(row, col);
        for (std::size_t r = 0; r < m.rows; ++r) {
            if (r == row || f.is_zero(m.at(r, col))) continue;
            const auto factor = f.div(m.at(r, col), pivot);
            for (std::size_t c = col; c < m.cols; ++c)
                m.at(r, c) = f.sub(m.at(r, c), f.mul(factor, m.at(row, c)));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace detail

template <class F>
std::size_t rank(const F& f, Matrix<typename F::Value> m) {
    return detail::eliminate(f, m).size();
}

// Basis of the right null space, one vector per free column.
template <class F>
std::vector<std::vector<typename F::Value>> kernel_basis(const F& f,
                                                         Matrix<typename F::Value> m) {
    using K = typename F::Value;
    const std::size_t n = m.cols;
    const auto pivots = detail::eliminate(f, m);
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots) is_pivot[c] = true;

    std::vector<std::vector<K>> basis;
    for (std::size_t free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<K> v(n, f.zero());
        v[free_col] = f.one();
        for (std::size_t i = 0; i < pivots.size(); ++i) {
            const std::size_t pc = pivots[i];
            if (pc > free_col) break;
            // row i has its pivot in column pc
            v[pc] = f.neg(f.div(m.at(i, free_col), m.at(i, pc)));
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

// One solution of M x = rhs, or nullopt when inconsistent.
template <class F>
std::optional<std::vector<typename F::Value>> solve(const F& f,
                                                    const Matrix<typename F::Value>& m,
                                                    const std::vector<typename F::Value>& rhs) {
    using K = typename F::Value;
    if (rhs.size() != m.rows) throw error("solve: rhs length mismatch");
    Matrix<K> aug(m.rows, m.cols + 1);
    for (std::size_t r = 0; r < m.rows; ++r) {
        for (std::size_t c = 0; c < m.cols; ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, m.cols) = rhs[r];
    }
    const auto pivots = detail::eliminate(f, aug);
    std::vector<K> x(m.cols, f.zero());
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        if (pivots[i] == m.cols) return std::nullopt;   // pivot in the rhs column
        x[pivots[i]] = f.div(aug.at(i, m.cols), aug.at(i, pivots[i]));
    }
    return x;
}

struct SubspaceDims {
    std::size_t dim_u = 0, dim_w = 0, dim_sum = 0, dim_intersection = 0;
};

// Dimensions of span(U), span(W), their sum and intersection; U and W are
// spanning sets given as row vectors of a common length.
template <class F>
SubspaceDims subspace_dims(const F& f,
                           const std::vector<std::vector<typename F::Value>>& u,
                           const std::vector<std::vector<typename F::Value>>& w) {
    using K = typename F::Value;
    std::size_t len = 0;
    if (!u.empty()) len = u.front().size();
    else if (!w.empty()) len = w.front().size();
    for (const auto& v : u)
        if (v.size() != len) throw error("subspace_dims: vector length mismatch");
    for (const auto& v : w)
        if (v.size() != len) throw error("subspace_dims: vector length mismatch");

    SubspaceDims d;
    d.dim_u = rank(f, Matrix<K>::from_rows(u));
    d.dim_w = rank(f, Matrix<K>::from_rows(w));
    auto stacked = u;
    stacked.insert(stacked.end(), w.begin(), w.end());
    d.dim_sum = rank(f, Matrix<K>::from_rows(stacked));
    d.dim_intersection = d.dim_u + d.dim_w - d.dim_sum;
    return d;
}

} // namespace intcx
