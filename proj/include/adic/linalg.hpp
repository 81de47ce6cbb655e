#pragma once

/// Exact linear algebra over Q. Matrices are stored as sparse rows; rank and kernels
/// come from Gaussian elimination with rational pivots, no floating point anywhere.

#include <algorithm>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "adic/rational.hpp"

namespace adic {

using sparse_row = std::vector<std::pair<std::size_t, rational>>; // sorted by column

class matrix {
public:
    matrix() = default;
    matrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}

    static matrix identity(std::size_t n) {
        matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.rows_[i].push_back({i, rational(1)});
        return m;
    }

    /// Row-major dense input.
    static matrix from_dense(std::size_t rows, std::size_t cols, const std::vector<rational>& entries) {
        if (entries.size() != rows * cols) throw error(errc::invalid_argument, "entry count does not match shape");
        matrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                if (entries[i * cols + j] != 0) m.rows_[i].push_back({j, entries[i * cols + j]});
        return m;
    }

    std::size_t rows() const noexcept { return rows_.size(); }
    std::size_t cols() const noexcept { return cols_; }
    const sparse_row& row(std::size_t i) const { return rows_.at(i); }

    rational at(std::size_t i, std::size_t j) const {
        for (const auto& [c, v] : rows_.at(i))
            if (c == j) return v;
        return rational(0);
    }

    /// Adds v at (i, j). Keeps rows sorted; cheap when entries arrive in column order.
    void add(std::size_t i, std::size_t j, const rational& v) {
        if (v == 0) return;
        auto& r = rows_.at(i);
        auto it = std::lower_bound(r.begin(), r.end(), j, [](const auto& e, std::size_t c) { return e.first < c; });
        if (it != r.end() && it->first == j) {
            it->second += v;
            if (it->second == 0) r.erase(it);
        } else {
            r.insert(it, {j, v});
        }
    }

    bool is_zero() const {
        return std::all_of(rows_.begin(), rows_.end(), [](const auto& r) { return r.empty(); });
    }

    std::vector<rational> apply(const std::vector<rational>& x) const {
        if (x.size() != cols_) throw error(errc::invalid_argument, "vector length does not match columns");
        std::vector<rational> y(rows());
        for (std::size_t i = 0; i < rows(); ++i)
            for (const auto& [c, v] : rows_[i]) y[i] += v * x[c];
        return y;
    }

    friend matrix operator*(const matrix& a, const matrix& b) {
        if (a.cols_ != b.rows()) throw error(errc::invalid_argument, "matrix shapes do not compose");
        matrix out(a.rows(), b.cols_);
        for (std::size_t i = 0; i < a.rows(); ++i) {
            std::map<std::size_t, rational> acc;
            for (const auto& [k, v] : a.rows_[i])
                for (const auto& [j, w] : b.rows_[k]) acc[j] += v * w;
            for (auto& [j, s] : acc)
                if (s != 0) out.rows_[i].push_back({j, s});
        }
        return out;
    }

    friend bool operator==(const matrix& a, const matrix& b) { return a.cols_ == b.cols_ && a.rows_ == b.rows_; }

    matrix transpose() const {
        matrix t(cols_, rows());
        for (std::size_t i = 0; i < rows(); ++i)
            for (const auto& [c, v] : rows_[i]) t.rows_[c].push_back({i, v});
        return t;
    }

    /// Stacks the columns of `o` to the right of this matrix.
    matrix hconcat(const matrix& o) const {
        if (o.rows() != rows()) throw error(errc::invalid_argument, "row counts differ");
        matrix m(rows(), cols_ + o.cols_);
        for (std::size_t i = 0; i < rows(); ++i) {
            m.rows_[i] = rows_[i];
            for (const auto& [c, v] : o.rows_[i]) m.rows_[i].push_back({c + cols_, v});
        }
        return m;
    }

private:
    std::size_t cols_ = 0;
    std::vector<sparse_row> rows_;
};

namespace detail {

/// row -= factor * pivot, both sorted sparse rows.
inline sparse_row axpy(const sparse_row& row, const rational& factor, const sparse_row& pivot) {
    sparse_row out;
    out.reserve(row.size() + pivot.size());
    std::size_t i = 0, j = 0;
    while (i < row.size() || j < pivot.size()) {
        if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
            out.push_back(row[i++]);
        } else if (i == row.size() || pivot[j].first < row[i].first) {
            out.push_back({pivot[j].first, -factor * pivot[j].second});
            ++j;
        } else {
            rational v = row[i].second - factor * pivot[j].second;
            if (v != 0) out.push_back({row[i].first, std::move(v)});
            ++i;
            ++j;
        }
    }
    return out;
}

/// Row echelon form as pivot rows keyed by leading column, each normalized to a leading 1.
inline std::map<std::size_t, sparse_row> echelon(const matrix& m) {
    std::vector<std::size_t> order(m.rows());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return m.row(a).size() < m.row(b).size(); });
    std::map<std::size_t, sparse_row> pivots;
    for (auto i : order) {
        sparse_row r = m.row(i);
        while (!r.empty()) {
            auto it = pivots.find(r.front().first);
            if (it == pivots.end()) break;
            const rational f = r.front().second;
            r = axpy(r, f, it->second);
        }
        if (r.empty()) continue;
        const rational lead = r.front().second;
        for (auto& e : r) e.second /= lead;
        pivots.emplace(r.front().first, std::move(r));
    }
    return pivots;
}

} // namespace detail

inline std::size_t rank(const matrix& m) {
    if (m.rows() > m.cols()) return detail::echelon(m.transpose()).size();
    return detail::echelon(m).size();
}

/// Basis of {x : m x = 0}, one vector per free column.
inline std::vector<std::vector<rational>> kernel_basis(const matrix& m) {
    auto pivots = detail::echelon(m);
    // Back-substitute to reduced echelon form, last pivot first.
    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
        for (auto& [c, row] : pivots) {
            if (c >= it->first) break;
            for (const auto& [col, v] : row)
                if (col == it->first) {
                    const rational f = v;
                    row = detail::axpy(row, f, it->second);
                    break;
                }
        }
    }
    std::vector<std::vector<rational>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (pivots.count(free)) continue;
        std::vector<rational> x(m.cols());
        x[free] = 1;
        for (const auto& [c, row] : pivots)
            for (const auto& [col, v] : row)
                if (col == free) x[c] = -v;
        basis.push_back(std::move(x));
    }
    return basis;
}

} // namespace adic
