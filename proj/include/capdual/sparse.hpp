#pragma once

#include <utility>
#include <vector>

#include "capdual/types.hpp"

namespace capdual {

/// Column-compressed integer matrix. Boundary and incidence operators are
/// extremely sparse (at most dim+1 entries per column), so products against
/// them are taken column-structurally instead of densely.
struct SparseIntMatrix {
    Index rows = 0;
    Index cols = 0;
    std::vector<std::vector<std::pair<Index, Int>>> entries;  // per column, row-sorted

    SparseIntMatrix() = default;
    SparseIntMatrix(Index r, Index c) : rows(r), cols(c), entries(static_cast<size_t>(c)) {}

    void add(Index r, Index c, Int v) { entries[static_cast<size_t>(c)].emplace_back(r, std::move(v)); }

    MatZ dense() const {
        MatZ m = MatZ::Zero(rows, cols);
        for (Index c = 0; c < cols; ++c)
            for (const auto& [r, v] : entries[static_cast<size_t>(c)]) m(r, c) += v;
        return m;
    }

    /// y = M x
    VecZ apply(const VecZ& x) const {
        VecZ y = VecZ::Zero(rows);
        for (Index c = 0; c < cols; ++c) {
            if (x(c) == 0) continue;
            for (const auto& [r, v] : entries[static_cast<size_t>(c)]) y(r) += v * x(c);
        }
        return y;
    }

    /// Y = M X, column by column.
    MatZ apply(const MatZ& x) const {
        MatZ y = MatZ::Zero(rows, x.cols());
        for (Index j = 0; j < x.cols(); ++j) {
            for (Index c = 0; c < cols; ++c) {
                if (x(c, j) == 0) continue;
                for (const auto& [r, v] : entries[static_cast<size_t>(c)]) y(r, j) += v * x(c, j);
            }
        }
        return y;
    }

    /// Y = X M — the dense-times-sparse product used to push change-of-basis
    /// matrices through a boundary operator without a dense GEMM.
    MatZ apply_left(const MatZ& x) const {
        MatZ y = MatZ::Zero(x.rows(), cols);
        for (Index c = 0; c < cols; ++c)
            for (const auto& [r, v] : entries[static_cast<size_t>(c)]) y.col(c) += v * x.col(r);
        return y;
    }

    SparseIntMatrix transpose() const {
        SparseIntMatrix t(cols, rows);
        for (Index c = 0; c < cols; ++c)
            for (const auto& [r, v] : entries[static_cast<size_t>(c)]) t.add(c, r, v);
        for (auto& col : t.entries)
            std::sort(col.begin(), col.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
        return t;
    }

    bool is_zero() const {
        for (const auto& col : entries)
            for (const auto& [r, v] : col)
                if (v != 0) return false;
        return true;
    }
};

/// Composition check M1 * M2 == 0, exact, via sparse application.
inline bool composes_to_zero(const SparseIntMatrix& m1, const SparseIntMatrix& m2) {
    for (Index c = 0; c < m2.cols; ++c) {
        VecZ col = VecZ::Zero(m2.rows);
        for (const auto& [r, v] : m2.entries[static_cast<size_t>(c)]) col(r) += v;
        if (!m1.apply(col).isZero(0)) return false;
    }
    return true;
}

}  // namespace capdual
