#pragma once

#include <cstdint>
#include <vector>

#include "capdual/sparse.hpp"
#include "capdual/types.hpp"

namespace capdual {

/// Dense matrix over the two-element field with 64-way packed rows.
/// This is the mod-2 elimination engine behind homology, rank and
/// membership computations when Ring::Mod2 is selected.
class GF2Matrix {
  public:
    GF2Matrix() = default;
    GF2Matrix(Index rows, Index cols);

    static GF2Matrix from_integer(const MatZ& m);
    static GF2Matrix from_sparse(const SparseIntMatrix& m);
    static GF2Matrix identity(Index n);

    Index rows() const { return rows_; }
    Index cols() const { return cols_; }

    bool get(Index r, Index c) const;
    void set(Index r, Index c, bool v);
    void flip(Index r, Index c);
    void xor_row(Index dst, Index src);          // row dst ^= row src
    bool row_is_zero(Index r) const;

    MatZ to_integer() const;                     // entries in {0,1}

    /// In-place row reduction to reduced row echelon form.
    /// Returns pivot column per pivot row (row-echelon order).
    std::vector<Index> rref();

    Index rank() const;

    /// Basis of the right kernel as a 0/1 integer matrix (cols = kernel dim).
    /// `free_cols_out`, when non-null, receives the non-pivot column indices;
    /// the kernel basis column j has a 1 in position free_cols[j] and zeros in
    /// the other free positions.
    MatZ kernel_basis(std::vector<Index>* free_cols_out = nullptr) const;

    /// Packed-word helpers for hot paths.
    static std::vector<uint64_t> pack(const VecZ& v);
    static VecZ unpack(const std::vector<uint64_t>& bits, Index n);
    void xor_row_into(Index r, std::vector<uint64_t>& acc) const;
    void set_row(Index r, const std::vector<uint64_t>& bits);

  private:
    Index rows_ = 0, cols_ = 0, words_per_row_ = 0;
    std::vector<uint64_t> bits_;

    uint64_t* row_ptr(Index r) { return bits_.data() + static_cast<size_t>(r) * words_per_row_; }
    const uint64_t* row_ptr(Index r) const {
        return bits_.data() + static_cast<size_t>(r) * words_per_row_;
    }
};

/// Row-space reducer: stores an echelon basis of the column space of a
/// matrix (as row vectors) and reduces arbitrary vectors modulo that space.
/// Used for coset membership and canonical class coordinates over Mod2.
class GF2Reducer {
  public:
    GF2Reducer() = default;
    /// Build from the columns of `m` (z x k): basis of the span of the columns.
    explicit GF2Reducer(const MatZ& m);

    Index dim() const { return static_cast<Index>(pivots_.size()); }
    Index space_dim() const { return space_dim_; }
    const std::vector<Index>& pivots() const { return pivots_; }

    /// Canonical representative of v modulo the stored span (0/1 entries).
    VecZ reduce(const VecZ& v) const;
    bool contains(const VecZ& v) const;

    /// The stored echelon basis, as columns of a 0/1 integer matrix.
    MatZ basis_columns() const;

  private:
    Index space_dim_ = 0;
    GF2Matrix basis_;                // rows = echelon basis vectors
    std::vector<Index> pivots_;     // pivot position per basis row
};

}  // namespace capdual
