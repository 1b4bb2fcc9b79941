#pragma once

#include <vector>

#include "capdual/types.hpp"

namespace capdual {

struct SnfOptions {
    bool want_u = true;
    bool want_v = true;
    bool want_u_inv = false;
    bool want_v_inv = false;
};

/// Certificate U * M * V = D with unimodular U, V and D diagonal with a
/// divisibility chain d1 | d2 | ... (non-negative, zeros trailing).
struct SnfCertificate {
    Index rows = 0;
    Index cols = 0;
    std::vector<Int> invariant_factors;  // the nonzero d_i
    MatZ u, v, u_inv, v_inv;             // only the requested factors are filled

    Index rank() const { return static_cast<Index>(invariant_factors.size()); }

    MatZ diagonal_matrix() const {
        MatZ d = MatZ::Zero(rows, cols);
        for (size_t i = 0; i < invariant_factors.size(); ++i)
            d(static_cast<Index>(i), static_cast<Index>(i)) = invariant_factors[i];
        return d;
    }

    bool all_factors_one() const {
        for (const Int& f : invariant_factors)
            if (f != 1) return false;
        return true;
    }
};

/// Exact Smith normal form. Pivoting picks the nonzero entry of least
/// absolute value (ties: lowest row, then column), which keeps intermediate
/// entry growth tame; arithmetic runs in checked 64-bit words and falls back
/// to arbitrary precision when anything would overflow.
SnfCertificate smith_normal_form(const MatZ& m, const SnfOptions& opts = {});

/// Exact determinant (fraction-free elimination). Used to certify the
/// unimodularity of SNF transforms in tests.
Int bareiss_determinant(const MatZ& m);

}  // namespace capdual
