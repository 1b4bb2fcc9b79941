#pragma once

#include <vector>

#include "capdual/chain_algebra.hpp"
#include "capdual/dual_cellulation.hpp"
#include "capdual/simplicial_complex.hpp"
#include "capdual/snf.hpp"

namespace capdual {

/// Chain-level cap product with the front-face evaluation convention: for a
/// d-simplex with ordered vertices v0..vd and a k-cochain phi,
///   sigma cap phi = phi([v0..vk]) * [vk..vd],
/// extended bilinearly. Satisfies the Leibniz identity
///   boundary(sigma cap phi) = (-1)^k (boundary(sigma) cap phi - sigma cap delta(phi)).
Chain cap_chain(const SimplicialComplex& k, const Chain& c, const Cochain& phi);

/// Matrix of phi -> fundamental cap phi, from C^k to C_{n-k}.
SparseIntMatrix cap_matrix(const SimplicialComplex& k, const VecZ& fundamental, int degree,
                           Ring ring);

/// Induced map between homology-level groups in their generator bases, with
/// the isomorphism verdict. The verdict combines two exact facts: the groups
/// have the same isomorphism type, and the map is surjective (a surjection
/// between isomorphic finitely generated abelian groups is an isomorphism).
struct InducedMap {
    MatZ matrix;  // class coordinates of the generator images (canonical residues)
    bool types_match = false;
    bool surjective = false;
    bool iso = false;
    SnfCertificate surjectivity_snf;  // Integers route
    Index mod2_rank = 0;              // Mod2 route
    Index mod2_needed = 0;
};

InducedMap induced_on_homology(const HomologyGroup& source, const HomologyGroup& target,
                               const MatZ& image_chains);

/// The duality map in one degree: chain level, induced level, verdict.
struct DualityMap {
    int degree = 0;
    Ring ring = Ring::Integers;
    MatZ chain_matrix;
    HomologyGroup source;  // H^k
    HomologyGroup target;  // H_{n-k}
    InducedMap induced;
    bool iso = false;
};

DualityMap duality_map(const SimplicialComplex& k, const ManifoldCertificate& cert, Ring ring,
                       int degree);

struct DualityReport {
    Ring ring = Ring::Integers;
    std::string route;  // "cap" or "dual-cells"
    bool pass = false;
    struct Row {
        int degree = 0;
        Index source_betti = 0;
        std::vector<Int> source_torsion;
        Index target_betti = 0;
        std::vector<Int> target_torsion;
        std::vector<Int> invariant_factors;  // of the surjectivity certificate
        bool iso = false;
    };
    std::vector<Row> rows;
};

/// Runs duality_map in every degree 0..n and aggregates the verdicts.
DualityReport verify_duality(const SimplicialComplex& k, const ManifoldCertificate& cert,
                             Ring ring);

/// Same verdict computed through the dual cellulation: cochains of K mapped
/// by the (identity-pattern) correspondence into the dual chain complex.
DualityReport verify_duality_dual_route(const SimplicialComplex& k,
                                        const ManifoldCertificate& cert, Ring ring);

}  // namespace capdual
