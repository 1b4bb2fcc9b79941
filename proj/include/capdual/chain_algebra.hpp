#pragma once

#include <vector>

#include "capdual/gf2.hpp"
#include "capdual/simplicial_complex.hpp"
#include "capdual/snf.hpp"
#include "capdual/sparse.hpp"
#include "capdual/types.hpp"

namespace capdual {

struct Chain {
    int degree = 0;
    Ring ring = Ring::Integers;
    VecZ values;
};

struct Cochain {
    int degree = 0;
    Ring ring = Ring::Integers;
    VecZ values;
};

/// Boundary operator C_k -> C_{k-1} in the canonical ordering; the face
/// dropping vertex i carries sign (-1)^i. Over Mod2 the signs collapse to 1.
MatZ boundary_matrix(const SimplicialComplex& k, int degree, Ring ring);

/// Sparse boundary operator with integer signs, defined for 0 <= degree <= n+1
/// (the two ends are the zero maps with the correct shapes).
SparseIntMatrix boundary_sparse(const SimplicialComplex& k, int degree);

/// delta_k = transpose of boundary_{k+1}.
MatZ coboundary_matrix(const SimplicialComplex& k, int degree, Ring ring);

bool is_cycle(const SimplicialComplex& k, const Chain& c);
bool is_cocycle(const SimplicialComplex& k, const Cochain& phi);

/// The bilinear pairing sum phi(sigma) * c(sigma), exact; Mod2 results are
/// reduced to {0,1}.
Int evaluate(const Cochain& phi, const Chain& c);

/// A finitely generated (co)homology group together with enough of the
/// change-of-basis data to solve for class coordinates of arbitrary cycles.
/// Generators are cycle vectors: the free-part basis first, then one
/// generator per torsion factor (aligned with `torsion`).
struct HomologyGroup {
    int degree = 0;
    Ring ring = Ring::Integers;
    Index space_dim = 0;  // dim C_k
    Index betti = 0;
    std::vector<Int> torsion;  // invariant factors > 1
    MatZ generators;           // space_dim x (betti + torsion count)

    Index generator_count() const { return betti + static_cast<Index>(torsion.size()); }

    struct ClassCoordinates {
        VecZ free;          // length betti
        VecZ torsion_part;  // canonical residues, length torsion count
        bool is_zero() const;
    };

    /// Coordinates of a cycle's homology class in the generator basis.
    /// Throws NotACycle when the input is not a cycle.
    ClassCoordinates class_coordinates(const VecZ& cycle) const;

    bool is_cycle_vector(const VecZ& v) const;

    // --- internals (change-of-basis data; consumed by the duality modules) ---
    SparseIntMatrix cycle_check;  // A with ker A = cycles
    Index cycle_dim = 0;          // z
    MatZ kernel_basis;            // space_dim x z
    // Integers path:
    MatZ vinv_trail;              // z x space_dim (kernel coordinates of a cycle)
    MatZ u_r;                     // z x z (quotient change of basis)
    std::vector<Int> rel_factors; // invariant factors of the relation matrix
    Index rel_rank = 0;
    std::vector<Index> torsion_rows;  // rows of u_r*y carrying the torsion coords
    // Mod2 path:
    std::vector<Index> kernel_free_rows;  // coordinate extraction positions
    GF2Matrix kernel_rows;                // packed: row j = kernel basis vector j
    GF2Reducer rel_reducer;
    std::vector<Index> mod2_free_coords;

    /// Kernel coordinates of a cycle (length z); checks the cycle condition.
    VecZ kernel_coordinates(const VecZ& cycle) const;
};

/// Homology of the two-step complex  C'' --B--> C --A--> C'  (requires AB=0):
/// ker A / im B, with generators and coordinate solvers. This is the engine
/// shared by simplicial homology, cohomology and the dual-cell complex.
HomologyGroup subquotient_group(const SparseIntMatrix& a, const SparseIntMatrix& b, int degree,
                                Ring ring);

/// H_k(K) over the chosen ring. Degrees outside [0, n] yield the zero group.
HomologyGroup homology(const SimplicialComplex& k, int degree, Ring ring);

/// H^k(K): homology of the transposed complex; generators are cocycles.
HomologyGroup cohomology(const SimplicialComplex& k, int degree, Ring ring);

}  // namespace capdual
