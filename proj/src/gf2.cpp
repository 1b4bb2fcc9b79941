#include "capdual/gf2.hpp"

#include <algorithm>

namespace capdual {

GF2Matrix::GF2Matrix(Index rows, Index cols)
    : rows_(rows), cols_(cols), words_per_row_((cols + 63) / 64) {
    bits_.assign(static_cast<size_t>(rows_) * words_per_row_, 0);
}

GF2Matrix GF2Matrix::from_integer(const MatZ& m) {
    GF2Matrix g(m.rows(), m.cols());
    for (Index r = 0; r < m.rows(); ++r)
        for (Index c = 0; c < m.cols(); ++c)
            if (mpz_odd_p(m(r, c).get_mpz_t())) g.flip(r, c);
    return g;
}

GF2Matrix GF2Matrix::from_sparse(const SparseIntMatrix& m) {
    GF2Matrix g(m.rows, m.cols);
    for (Index c = 0; c < m.cols; ++c)
        for (const auto& [r, v] : m.entries[static_cast<size_t>(c)])
            if (mpz_odd_p(v.get_mpz_t())) g.flip(r, c);
    return g;
}

GF2Matrix GF2Matrix::identity(Index n) {
    GF2Matrix g(n, n);
    for (Index i = 0; i < n; ++i) g.set(i, i, true);
    return g;
}

bool GF2Matrix::get(Index r, Index c) const {
    return (row_ptr(r)[c >> 6] >> (c & 63)) & 1u;
}

void GF2Matrix::set(Index r, Index c, bool v) {
    uint64_t mask = uint64_t(1) << (c & 63);
    if (v)
        row_ptr(r)[c >> 6] |= mask;
    else
        row_ptr(r)[c >> 6] &= ~mask;
}

void GF2Matrix::flip(Index r, Index c) { row_ptr(r)[c >> 6] ^= uint64_t(1) << (c & 63); }

void GF2Matrix::xor_row(Index dst, Index src) {
    uint64_t* d = row_ptr(dst);
    const uint64_t* s = row_ptr(src);
    for (Index w = 0; w < words_per_row_; ++w) d[w] ^= s[w];
}

bool GF2Matrix::row_is_zero(Index r) const {
    const uint64_t* p = row_ptr(r);
    for (Index w = 0; w < words_per_row_; ++w)
        if (p[w]) return false;
    return true;
}

MatZ GF2Matrix::to_integer() const {
    MatZ m = MatZ::Zero(rows_, cols_);
    for (Index r = 0; r < rows_; ++r)
        for (Index c = 0; c < cols_; ++c)
            if (get(r, c)) m(r, c) = 1;
    return m;
}

std::vector<Index> GF2Matrix::rref() {
    std::vector<Index> pivots;
    Index row = 0;
    for (Index col = 0; col < cols_ && row < rows_; ++col) {
        Index piv = -1;
        for (Index r = row; r < rows_; ++r)
            if (get(r, col)) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        if (piv != row)
            for (Index w = 0; w < words_per_row_; ++w) std::swap(row_ptr(row)[w], row_ptr(piv)[w]);
        for (Index r = 0; r < rows_; ++r)
            if (r != row && get(r, col)) xor_row(r, row);
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

Index GF2Matrix::rank() const {
    GF2Matrix copy = *this;
    return static_cast<Index>(copy.rref().size());
}

MatZ GF2Matrix::kernel_basis(std::vector<Index>* free_cols_out) const {
    GF2Matrix r = *this;
    std::vector<Index> pivots = r.rref();
    std::vector<bool> is_pivot(static_cast<size_t>(cols_), false);
    for (Index p : pivots) is_pivot[static_cast<size_t>(p)] = true;
    std::vector<Index> free_cols;
    for (Index c = 0; c < cols_; ++c)
        if (!is_pivot[static_cast<size_t>(c)]) free_cols.push_back(c);

    MatZ basis = MatZ::Zero(cols_, static_cast<Index>(free_cols.size()));
    for (size_t j = 0; j < free_cols.size(); ++j) {
        Index fc = free_cols[j];
        basis(fc, static_cast<Index>(j)) = 1;
        for (size_t i = 0; i < pivots.size(); ++i)
            if (r.get(static_cast<Index>(i), fc)) basis(pivots[i], static_cast<Index>(j)) = 1;
    }
    if (free_cols_out) *free_cols_out = std::move(free_cols);
    return basis;
}

std::vector<uint64_t> GF2Matrix::pack(const VecZ& v) {
    std::vector<uint64_t> bits(static_cast<size_t>((v.size() + 63) / 64), 0);
    for (Index i = 0; i < v.size(); ++i)
        if (mpz_odd_p(v(i).get_mpz_t())) bits[static_cast<size_t>(i >> 6)] ^= uint64_t(1) << (i & 63);
    return bits;
}

VecZ GF2Matrix::unpack(const std::vector<uint64_t>& bits, Index n) {
    VecZ v = VecZ::Zero(n);
    for (Index i = 0; i < n; ++i)
        if ((bits[static_cast<size_t>(i >> 6)] >> (i & 63)) & 1u) v(i) = 1;
    return v;
}

void GF2Matrix::xor_row_into(Index r, std::vector<uint64_t>& acc) const {
    const uint64_t* s = row_ptr(r);
    for (Index w = 0; w < words_per_row_; ++w) acc[static_cast<size_t>(w)] ^= s[w];
}

void GF2Matrix::set_row(Index r, const std::vector<uint64_t>& bits) {
    uint64_t* d = row_ptr(r);
    for (Index w = 0; w < words_per_row_; ++w) d[w] = bits[static_cast<size_t>(w)];
}

GF2Reducer::GF2Reducer(const MatZ& m) : space_dim_(m.rows()) {
    basis_ = GF2Matrix(m.cols(), m.rows());  // candidate rows = transposed columns
    for (Index c = 0; c < m.cols(); ++c)
        for (Index r = 0; r < m.rows(); ++r)
            if (mpz_odd_p(m(r, c).get_mpz_t())) basis_.set(c, r, true);
    pivots_ = basis_.rref();
    // after rref the first dim() rows carry the echelon basis
}

VecZ GF2Reducer::reduce(const VecZ& v) const {
    require(v.size() == space_dim_, ErrorCode::DegreeMismatch, "reducer dimension mismatch");
    std::vector<uint64_t> bits = GF2Matrix::pack(v);
    for (size_t i = 0; i < pivots_.size(); ++i) {
        Index p = pivots_[i];
        if ((bits[static_cast<size_t>(p >> 6)] >> (p & 63)) & 1u)
            basis_.xor_row_into(static_cast<Index>(i), bits);
    }
    return GF2Matrix::unpack(bits, space_dim_);
}

bool GF2Reducer::contains(const VecZ& v) const { return reduce(v).isZero(0); }

MatZ GF2Reducer::basis_columns() const {
    MatZ m = MatZ::Zero(space_dim_, dim());
    for (Index i = 0; i < dim(); ++i)
        for (Index c = 0; c < space_dim_; ++c)
            if (basis_.get(i, c)) m(c, i) = 1;
    return m;
}

}  // namespace capdual
