#pragma once

#include <vector>

#include "capdual/chain_algebra.hpp"
#include "capdual/simplicial_complex.hpp"
#include "capdual/sparse.hpp"

namespace capdual {

/// Dual k-cell of an (n-k)-simplex: the block of barycentric-subdivision
/// k-simplices whose flag starts at the center simplex, as a signed chain.
struct DualCell {
    int center_dim = 0;
    Index center_index = 0;
    std::vector<std::pair<Index, Int>> chain;  // (Sd k-simplex index, coefficient)
};

/// The dual block decomposition of a closed pseudomanifold. Signs are
/// inherited from the global orientation when one exists; otherwise the
/// whole structure is taken mod 2.
struct DualComplex {
    int n = 0;
    Ring ring = Ring::Integers;
    Subdivision sd;
    std::vector<std::vector<DualCell>> cells;  // [k], ordered by center simplex index
    std::vector<SparseIntMatrix> incidence;    // [k]: cells[k] -> cells[k-1], k = 1..n

    Index cell_count(int k) const {
        if (k < 0 || k > n) return 0;
        return static_cast<Index>(cells[static_cast<size_t>(k)].size());
    }
    /// Boundary operator of the dual chain complex with the zero maps at the
    /// ends, shaped like boundary_sparse.
    SparseIntMatrix boundary(int k) const;
};

DualComplex dual_complex(const SimplicialComplex& k, const ManifoldCertificate& cert);

/// The correspondence T_k from k-cochains of K to (n-k)-chains of the dual:
/// in the canonical bases T_k is the identity pattern, and the chain-map
/// identity T_{k+1} delta_k = eps(k) * incidence_{n-k} T_k holds with the
/// measured global sign eps(k) recorded per degree.
struct DualCorrespondence {
    Ring ring = Ring::Integers;
    int n = 0;
    std::vector<int> epsilon;  // per degree k = 0..n-1

    MatZ t_matrix(Index size) const { return MatZ::Identity(size, size); }
};

DualCorrespondence dual_correspondence(const SimplicialComplex& k, const DualComplex& dual,
                                       Ring ring);

/// H_j of the dual chain complex, with the same generator machinery as the
/// simplicial groups.
HomologyGroup dual_homology(const DualComplex& dual, int degree, Ring ring);

}  // namespace capdual
