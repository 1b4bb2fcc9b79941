#pragma once

#include <utility>
#include <vector>

#include "capdual/chain_algebra.hpp"
#include "capdual/simplicial_complex.hpp"
#include "capdual/types.hpp"

namespace capdual {

/// Circle-valued vertex potential of an integral 1-cocycle, together with
/// the spanning tree used for integration and the tree-normalized cocycle
/// (zero on tree edges). With integral input the potential is identically
/// zero; the crossing data lives in the normalized cocycle itself.
struct VertexPotential {
    Ring ring = Ring::Integers;
    std::vector<Rat> h;            // per vertex, value in [0,1)
    std::vector<int> tree_parent;  // per vertex, -1 at the root
    std::vector<Index> tree_parent_edge;
    VecZ tree_potential;  // integral of phi along the tree
    VecZ normalized;      // phi' = phi - delta(tree integral)
};

/// Integrates a validated 1-cocycle over a breadth-first spanning tree
/// (root 0, lexicographic neighbor order).
VertexPotential integrate_cocycle(const SimplicialComplex& k, const Cochain& phi);

/// A level curve on a surface in normal-curve form: transverse crossing
/// counts per edge, matched into per-triangle arcs, chained into closed
/// components.
struct NormalCurve {
    Ring ring = Ring::Integers;
    Rat t;
    VecZ edge_weights;                // crossings per edge
    std::vector<int> crossing_signs;  // per edge: +1, -1, or 0
    std::vector<Index> crossing_offset;  // prefix sums; crossing id = offset[e] + slot

    struct Arc {
        Index triangle = 0;
        long sheet = 0;  // level offset within the triangle's local potential
        Index edge_a = 0;
        long slot_a = 0;
        Index edge_b = 0;
        long slot_b = 0;
    };
    std::vector<Arc> arcs;
    Index components = 0;
    std::vector<Index> arc_component;

    Index crossing_count() const {
        return crossing_offset.empty() ? 0 : crossing_offset.back();
    }
};

NormalCurve level_curve(const SimplicialComplex& k, const Cochain& phi, const Rat& t);

/// Signed (or mod-2) count of crossings of the curve with the edges of a
/// 1-cycle, computed from the stored edge weights and crossing signs.
Int intersection_number(const SimplicialComplex& k, const NormalCurve& curve, const Chain& z);

/// The level curve at value t expressed as a simplicial 1-cycle in the
/// barycentric subdivision (orientable surfaces, integral cocycles).
VecZ level_curve_subdivided(const SimplicialComplex& k, const Cochain& phi, const Rat& t);

/// W with boundary(W) = L(t1) - L(t0), both curves expressed in the
/// subdivision; assembled triangle by triangle from the sheets swept
/// between the two values.
struct CoboundingChain {
    Rat t0, t1;
    VecZ w;       // 2-chain in the barycentric subdivision
    VecZ curve0;  // L(t0) in the subdivision
    VecZ curve1;  // L(t1) in the subdivision
};

CoboundingChain deform_level(const SimplicialComplex& k, const Cochain& phi, const Rat& t0,
                             const Rat& t1);

/// A level surface in a triangulated closed 3-manifold: normal triangles
/// (cutting off one corner) and quadrilaterals (separating a corner pair)
/// per tetrahedron, with globally consistent edge crossings.
struct NormalSurface {
    Ring ring = Ring::Integers;
    Rat t;
    VecZ edge_weights;
    std::vector<int> crossing_signs;
    std::vector<Index> crossing_offset;

    enum class PatchKind { Triangle, Quad };
    struct Patch {
        Index tet = 0;
        long sheet = 0;
        PatchKind kind = PatchKind::Triangle;
        int cut_corner = -1;  // Triangle: local corner index cut off
        int quad_pair = -1;   // Quad: 0 -> {01|23}, 1 -> {02|13}, 2 -> {03|12}
        std::vector<std::pair<Index, long>> corners;  // (edge, slot) around the patch
    };
    std::vector<Patch> patches;

    Index crossing_count() const {
        return crossing_offset.empty() ? 0 : crossing_offset.back();
    }
};

NormalSurface level_surface_3d(const SimplicialComplex& k, const Cochain& phi, const Rat& t);

Int intersection_number(const SimplicialComplex& k, const NormalSurface& surface, const Chain& z);

}  // namespace capdual
