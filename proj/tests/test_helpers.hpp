#pragma once

// Shared oracles for the test suite. These deliberately re-derive ranks and
// counts through dead-simple textbook code, independent of the library's own
// elimination paths.

#include <random>
#include <set>
#include <vector>

#include "capdual/types.hpp"

namespace testutil {

using capdual::Index;
using capdual::Int;
using capdual::MatQ;
using capdual::MatZ;
using capdual::Rat;
using capdual::VecZ;

/// Rank over the rationals by plain Gaussian elimination.
inline Index rank_oracle_q(const MatZ& m) {
    MatQ a(m.rows(), m.cols());
    for (Index r = 0; r < m.rows(); ++r)
        for (Index c = 0; c < m.cols(); ++c) a(r, c) = Rat(m(r, c));
    Index rank = 0;
    for (Index c = 0; c < a.cols() && rank < a.rows(); ++c) {
        Index piv = -1;
        for (Index r = rank; r < a.rows(); ++r)
            if (a(r, c) != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        a.row(rank).swap(a.row(piv));
        for (Index r = 0; r < a.rows(); ++r) {
            if (r == rank || a(r, c) == 0) continue;
            Rat f = a(r, c) / a(rank, c);
            a.row(r) -= f * a.row(rank);
        }
        ++rank;
    }
    return rank;
}

/// Rank over the two-element field, textbook elimination on bool vectors.
inline Index rank_oracle_mod2(const MatZ& m) {
    std::vector<std::vector<bool>> a(static_cast<size_t>(m.rows()),
                                     std::vector<bool>(static_cast<size_t>(m.cols())));
    for (Index r = 0; r < m.rows(); ++r)
        for (Index c = 0; c < m.cols(); ++c)
            a[static_cast<size_t>(r)][static_cast<size_t>(c)] = mpz_odd_p(m(r, c).get_mpz_t());
    Index rank = 0;
    for (Index c = 0; c < m.cols() && rank < m.rows(); ++c) {
        Index piv = -1;
        for (Index r = rank; r < m.rows(); ++r)
            if (a[static_cast<size_t>(r)][static_cast<size_t>(c)]) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[static_cast<size_t>(rank)], a[static_cast<size_t>(piv)]);
        for (Index r = 0; r < m.rows(); ++r) {
            if (r == rank || !a[static_cast<size_t>(r)][static_cast<size_t>(c)]) continue;
            for (Index j = 0; j < m.cols(); ++j)
                a[static_cast<size_t>(r)][static_cast<size_t>(j)] =
                    a[static_cast<size_t>(r)][static_cast<size_t>(j)] ^
                    a[static_cast<size_t>(rank)][static_cast<size_t>(j)];
        }
        ++rank;
    }
    return rank;
}

/// Brute-force face counting: distinct k-subsets of the given top tuples.
inline std::vector<size_t> face_count_oracle(const std::vector<std::vector<long>>& tops) {
    size_t arity = tops.front().size();
    std::vector<std::set<std::vector<long>>> per(arity);
    for (auto t : tops) {
        std::sort(t.begin(), t.end());
        for (size_t mask = 1; mask < (size_t(1) << arity); ++mask) {
            std::vector<long> sub;
            for (size_t i = 0; i < arity; ++i)
                if (mask & (size_t(1) << i)) sub.push_back(t[i]);
            per[sub.size() - 1].insert(sub);
        }
    }
    std::vector<size_t> f;
    for (const auto& s : per) f.push_back(s.size());
    return f;
}

inline std::mt19937& rng() {
    static std::mt19937 gen(20240801u);
    return gen;
}

inline MatZ random_matrix(Index rows, Index cols, int lo, int hi) {
    std::uniform_int_distribution<int> dist(lo, hi);
    MatZ m(rows, cols);
    for (Index r = 0; r < rows; ++r)
        for (Index c = 0; c < cols; ++c) m(r, c) = dist(rng());
    return m;
}

inline VecZ random_vector(Index n, int lo, int hi) {
    std::uniform_int_distribution<int> dist(lo, hi);
    VecZ v(n);
    for (Index i = 0; i < n; ++i) v(i) = dist(rng());
    return v;
}

}  // namespace testutil
