#include "capdual/level_sets.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace capdual {

namespace {

inline Int mod2(const Int& x) { return Int(mpz_odd_p(x.get_mpz_t()) ? 1 : 0); }

inline VecZ mod2_vec(VecZ v) {
    for (Index i = 0; i < v.size(); ++i) v(i) = mod2(v(i));
    return v;
}

/// ceil(q) for an exact rational.
Int rat_ceil(const Rat& q) {
    Int r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

void require_regular(const Rat& t) {
    require(t > 0 && t < 1, ErrorCode::NotRegularValue,
            "level value must lie strictly between 0 and 1");
}

/// Tree-normalization shared by all dimensions; the public
/// integrate_cocycle wraps this with the surface check.
VertexPotential normalize_cocycle(const SimplicialComplex& k, const Cochain& phi) {
    require(phi.degree == 1, ErrorCode::DegreeMismatch, "level sets need a 1-cochain");
    require(phi.values.size() == k.count(1), ErrorCode::DegreeMismatch,
            "cochain length does not match edge count");
    require(is_cocycle(k, phi), ErrorCode::NotACocycle, "input cochain is not a cocycle");

    VertexPotential pot;
    pot.ring = phi.ring;
    const Index nv = k.vertex_count;
    pot.h.assign(static_cast<size_t>(nv), Rat(0));
    pot.tree_parent.assign(static_cast<size_t>(nv), -1);
    pot.tree_parent_edge.assign(static_cast<size_t>(nv), -1);
    pot.tree_potential = VecZ::Zero(nv);

    // adjacency with sorted neighbors for a deterministic BFS tree
    std::vector<std::vector<std::pair<int, Index>>> adj(static_cast<size_t>(nv));
    for (Index e = 0; e < k.count(1); ++e) {
        const Simplex& s = k.simplex(1, e);
        adj[static_cast<size_t>(s[0])].emplace_back(s[1], e);
        adj[static_cast<size_t>(s[1])].emplace_back(s[0], e);
    }
    for (auto& list : adj) std::sort(list.begin(), list.end());

    std::vector<bool> seen(static_cast<size_t>(nv), false);
    std::vector<int> queue = {0};
    seen[0] = true;
    for (size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        for (const auto& [v, e] : adj[static_cast<size_t>(u)]) {
            if (seen[static_cast<size_t>(v)]) continue;
            seen[static_cast<size_t>(v)] = true;
            pot.tree_parent[static_cast<size_t>(v)] = u;
            pot.tree_parent_edge[static_cast<size_t>(v)] = e;
            Int step = phi.values(e);
            if (u > v) step = -step;  // canonical edge orientation is min -> max
            pot.tree_potential(v) = pot.tree_potential(u) + step;
            if (phi.ring == Ring::Mod2) pot.tree_potential(v) = mod2(pot.tree_potential(v));
            queue.push_back(v);
        }
    }
    require(std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }),
            ErrorCode::NotConnected, "cocycle integration needs a connected complex");

    pot.normalized = VecZ::Zero(k.count(1));
    for (Index e = 0; e < k.count(1); ++e) {
        const Simplex& s = k.simplex(1, e);
        Int val = phi.values(e) - (pot.tree_potential(s[1]) - pot.tree_potential(s[0]));
        pot.normalized(e) = phi.ring == Ring::Mod2 ? mod2(val) : val;
    }
    for (Index v = 1; v < nv; ++v)
        require(pot.normalized(pot.tree_parent_edge[static_cast<size_t>(v)]) == 0,
                ErrorCode::InternalError, "normalization left a nonzero tree edge");
    return pot;
}

/// Local integer potential of the normalized cocycle on one top simplex:
/// zero at the first (smallest) vertex. Well-defined because the cocycle
/// condition holds on every 2-face.
VecZ local_potential(const SimplicialComplex& k, const VecZ& normalized, Ring ring, int dim,
                     Index top) {
    const Simplex& s = k.simplex(dim, top);
    VecZ g = VecZ::Zero(static_cast<Index>(s.size()));
    for (size_t j = 1; j < s.size(); ++j) {
        Index e = k.index_of(1, {s[0], s[static_cast<size_t>(j)]});
        g(static_cast<Index>(j)) = normalized(e);
    }
    for (size_t a = 1; a < s.size(); ++a)
        for (size_t b = a + 1; b < s.size(); ++b) {
            Index e = k.index_of(1, {s[a], s[b]});
            Int diff = g(static_cast<Index>(b)) - g(static_cast<Index>(a));
            if (ring == Ring::Mod2) diff = mod2(diff);
            Int want = ring == Ring::Mod2 ? mod2(normalized(e)) : normalized(e);
            require(diff == want, ErrorCode::InternalError,
                    "local potential inconsistent with the cocycle");
        }
    return g;
}

/// Slot (position order from the smaller endpoint) of the crossing at
/// edge-local sheet m_e on an edge with weight w != 0.
long crossing_slot(const Int& w, const Int& m_e) {
    Int slot = w > 0 ? m_e : Int(-1 - m_e);
    return slot.get_si();
}

}  // namespace

VertexPotential integrate_cocycle(const SimplicialComplex& k, const Cochain& phi) {
    require(k.dim == 2, ErrorCode::NotASurface, "integrate_cocycle expects a surface");
    ManifoldCertificate cert = validate_closed_manifold(k);
    require(cert.is_closed_pseudomanifold, ErrorCode::NotClosed,
            "integrate_cocycle expects a closed surface");
    return normalize_cocycle(k, phi);
}

NormalCurve level_curve(const SimplicialComplex& k, const Cochain& phi, const Rat& t) {
    VertexPotential pot = integrate_cocycle(k, phi);
    require_regular(t);

    NormalCurve curve;
    curve.ring = phi.ring;
    curve.t = t;
    const Index ne = k.count(1);
    curve.edge_weights = VecZ::Zero(ne);
    curve.crossing_signs.assign(static_cast<size_t>(ne), 0);
    for (Index e = 0; e < ne; ++e) {
        const Int& w = pot.normalized(e);
        curve.edge_weights(e) = abs(w);
        curve.crossing_signs[static_cast<size_t>(e)] = w > 0 ? 1 : (w < 0 ? -1 : 0);
    }
    if (curve.ring == Ring::Mod2)
        for (Index e = 0; e < ne; ++e)
            curve.crossing_signs[static_cast<size_t>(e)] = curve.edge_weights(e) == 0 ? 0 : 1;

    curve.crossing_offset.assign(static_cast<size_t>(ne) + 1, 0);
    for (Index e = 0; e < ne; ++e)
        curve.crossing_offset[static_cast<size_t>(e) + 1] =
            curve.crossing_offset[static_cast<size_t>(e)] +
            static_cast<Index>(curve.edge_weights(e).get_si());

    // per-triangle arcs, matched sheet by sheet
    for (Index tr = 0; tr < k.count(2); ++tr) {
        const Simplex& s = k.simplex(2, tr);
        VecZ g = local_potential(k, pot.normalized, curve.ring, 2, tr);
        struct EdgeRef {
            Index edge;
            Int glo, ghi;  // local potentials at the canonical endpoints
        };
        std::array<EdgeRef, 3> edges;
        int pos = 0;
        for (int a = 0; a < 3; ++a)
            for (int b = a + 1; b < 3; ++b) {
                Index e = k.index_of(1, {s[static_cast<size_t>(a)], s[static_cast<size_t>(b)]});
                edges[static_cast<size_t>(pos++)] = {e, g(a), g(b)};
            }

        auto edge_crossing = [&](const EdgeRef& er, const Int& sheet,
                                 std::pair<Index, long>& out) {
            // the sheet crosses iff it separates the endpoint potentials
            Int lo = std::min(er.glo, er.ghi), hi = std::max(er.glo, er.ghi);
            if (!(sheet >= lo && sheet < hi)) return false;
            Int w = er.ghi - er.glo;
            Int m_e = sheet - er.glo;
            out = {er.edge, crossing_slot(w, m_e)};
            return true;
        };

        if (curve.ring == Ring::Integers) {
            Int lo = g.minCoeff(), hi = g.maxCoeff();
            for (Int m = lo; m < hi; ++m) {
                NormalCurve::Arc arc;
                arc.triangle = tr;
                arc.sheet = m.get_si();
                std::pair<Index, long> hit;
                int found = 0;
                for (const auto& er : edges)
                    if (edge_crossing(er, m, hit)) {
                        if (found == 0) {
                            arc.edge_a = hit.first;
                            arc.slot_a = hit.second;
                        } else {
                            arc.edge_b = hit.first;
                            arc.slot_b = hit.second;
                        }
                        ++found;
                    }
                require(found == 2, ErrorCode::InternalError,
                        "sheet must cross exactly two edges of a triangle");
                curve.arcs.push_back(arc);
            }
        } else {
            // mod 2: each triangle has zero or exactly two crossed edges
            std::vector<std::pair<Index, long>> hits;
            for (const auto& er : edges)
                if (mod2(er.ghi - er.glo) == 1) hits.emplace_back(er.edge, 0);
            require(hits.size() == 0 || hits.size() == 2, ErrorCode::InternalError,
                    "mod-2 cocycle must cross an even number of triangle edges");
            if (hits.size() == 2) {
                NormalCurve::Arc arc;
                arc.triangle = tr;
                arc.sheet = 0;
                arc.edge_a = hits[0].first;
                arc.slot_a = hits[0].second;
                arc.edge_b = hits[1].first;
                arc.slot_b = hits[1].second;
                curve.arcs.push_back(arc);
            }
        }
    }

    // chain arcs into closed components: every crossing meets exactly two arcs
    const Index total = curve.crossing_count();
    std::vector<Index> degree(static_cast<size_t>(total), 0);
    std::vector<Index> parent(static_cast<size_t>(total));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](Index x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    };
    auto crossing_id = [&](Index e, long slot) {
        return curve.crossing_offset[static_cast<size_t>(e)] + static_cast<Index>(slot);
    };
    for (const auto& arc : curve.arcs) {
        Index a = crossing_id(arc.edge_a, arc.slot_a);
        Index b = crossing_id(arc.edge_b, arc.slot_b);
        ++degree[static_cast<size_t>(a)];
        ++degree[static_cast<size_t>(b)];
        parent[static_cast<size_t>(find(a))] = find(b);
    }
    for (Index c = 0; c < total; ++c)
        require(degree[static_cast<size_t>(c)] == 2, ErrorCode::InternalError,
                "crossing not matched by exactly two arcs");
    std::map<Index, Index> roots;
    for (Index c = 0; c < total; ++c) roots.emplace(find(c), static_cast<Index>(roots.size()));
    curve.components = static_cast<Index>(roots.size());
    curve.arc_component.clear();
    for (const auto& arc : curve.arcs)
        curve.arc_component.push_back(roots.at(find(crossing_id(arc.edge_a, arc.slot_a))));
    return curve;
}

namespace {

Int intersection_from_edges(const SimplicialComplex& k, Ring ring, const VecZ& weights,
                            const std::vector<int>& signs, const Chain& z) {
    require(z.degree == 1, ErrorCode::DegreeMismatch, "intersection expects a 1-cycle");
    require(z.ring == ring, ErrorCode::RingMismatch, "intersection ring mismatch");
    require(is_cycle(k, z), ErrorCode::NotACycle, "intersection against a non-cycle");
    Int total = 0;
    for (Index e = 0; e < k.count(1); ++e)
        total += z.values(e) * signs[static_cast<size_t>(e)] * weights(e);
    return ring == Ring::Mod2 ? mod2(total) : total;
}

}  // namespace

Int intersection_number(const SimplicialComplex& k, const NormalCurve& curve, const Chain& z) {
    return intersection_from_edges(k, curve.ring, curve.edge_weights, curve.crossing_signs, z);
}

Int intersection_number(const SimplicialComplex& k, const NormalSurface& surface, const Chain& z) {
    return intersection_from_edges(k, surface.ring, surface.edge_weights, surface.crossing_signs,
                                   z);
}

namespace {

/// Shared machinery for the subdivided curve and the cobounding chain.
/// Buckets every subdivision triangle by the first sheet at or above the
/// minimum of its vertex potentials; the curve is the signed inter-bucket
/// jump and the swept region is the bucket difference between two values.
struct SubdividedLevel {
    Subdivision sd;
    std::vector<int> orientation;           // per Sd 2-simplex
    std::vector<Index> owner;               // Sd 2-simplex -> K triangle
    std::vector<VecZ> local_g;              // per K triangle
    std::vector<Rat> min_value;             // per Sd 2-simplex, in owner coordinates

    SubdividedLevel(const SimplicialComplex& k, const VecZ& normalized) {
        sd = barycentric_subdivision(k);
        ManifoldCertificate cert = validate_closed_manifold(sd.complex);
        require(cert.is_closed_pseudomanifold, ErrorCode::NotClosed,
                "subdivided level sets need a closed surface");
        require(cert.orientable, ErrorCode::NotOrientable,
                "subdivided level chains need an orientable surface");
        orientation = cert.orientation;

        local_g.resize(static_cast<size_t>(k.count(2)));
        for (Index tr = 0; tr < k.count(2); ++tr)
            local_g[static_cast<size_t>(tr)] =
                local_potential(k, normalized, Ring::Integers, 2, tr);

        owner.resize(static_cast<size_t>(sd.complex.count(2)));
        min_value.resize(static_cast<size_t>(sd.complex.count(2)));
        for (Index si = 0; si < sd.complex.count(2); ++si) {
            const Simplex& flag = sd.complex.simplex(2, si);
            const auto [d2, t2] = sd.vertex_origin[static_cast<size_t>(flag[2])];
            require(d2 == 2, ErrorCode::InternalError, "surface flag must end at a triangle");
            owner[static_cast<size_t>(si)] = t2;
            Rat best;
            bool first = true;
            for (int j = 0; j < 3; ++j) {
                Rat val = barycenter_value(k, t2, flag[static_cast<size_t>(j)]);
                if (first || val < best) {
                    best = val;
                    first = false;
                }
            }
            min_value[static_cast<size_t>(si)] = best;
        }
    }

    /// Mean of the owner-triangle local potential over the vertices of the
    /// K-simplex behind one subdivision vertex.
    Rat barycenter_value(const SimplicialComplex& k, Index owner_tr, Index sd_vertex) const {
        const auto [dim, idx] = sd.vertex_origin[static_cast<size_t>(sd_vertex)];
        const Simplex& cell = k.simplex(dim, idx);
        const Simplex& tri = k.simplex(2, owner_tr);
        const VecZ& g = local_g[static_cast<size_t>(owner_tr)];
        Int total = 0;
        for (int v : cell) {
            auto it = std::find(tri.begin(), tri.end(), v);
            require(it != tri.end(), ErrorCode::InternalError,
                    "subdivision vertex outside its owner triangle");
            total += g(static_cast<Index>(it - tri.begin()));
        }
        Rat mean(total, Int(static_cast<long>(cell.size())));
        mean.canonicalize();
        return mean;
    }

    Int bucket(Index si, const Rat& t) const {
        return rat_ceil(min_value[static_cast<size_t>(si)] - t);
    }

    /// Integer shift aligning tau2's owner potential with tau1's across the
    /// shared subdivision edge (zero when both live in the same triangle).
    Int shift_between(const SimplicialComplex& k, Index tau1, Index tau2, Index sd_edge) const {
        Index t1 = owner[static_cast<size_t>(tau1)];
        Index t2 = owner[static_cast<size_t>(tau2)];
        if (t1 == t2) return 0;
        const Simplex& eta = sd.complex.simplex(1, sd_edge);
        // a cross-triangle subdivision edge lies on a K-edge; anchor at its
        // smaller K-vertex
        const auto [d0, i0] = sd.vertex_origin[static_cast<size_t>(eta[0])];
        require(d0 == 0, ErrorCode::InternalError, "cross-triangle edge must touch a K-vertex");
        (void)i0;
        int anchor = k.simplex(0, i0)[0];
        auto value_at = [&](Index tr) {
            const Simplex& tri = k.simplex(2, tr);
            auto it = std::find(tri.begin(), tri.end(), anchor);
            require(it != tri.end(), ErrorCode::InternalError, "anchor outside triangle");
            return local_g[static_cast<size_t>(tr)](static_cast<Index>(it - tri.begin()));
        };
        return value_at(t1) - value_at(t2);
    }

    /// The curve chain at value t over Sd 1-simplices.
    VecZ curve_chain(const SimplicialComplex& k, const Rat& t) const {
        const SimplicialComplex& s = sd.complex;
        VecZ chain = VecZ::Zero(s.count(1));
        // cofaces of every Sd edge
        std::vector<std::vector<std::pair<Index, int>>> cofaces(static_cast<size_t>(s.count(1)));
        for (Index tau = 0; tau < s.count(2); ++tau)
            for (const auto& [f, sign] : s.facets_with_signs(2, tau))
                cofaces[static_cast<size_t>(f)].emplace_back(tau, sign);
        for (Index eta = 0; eta < s.count(1); ++eta) {
            const auto& cf = cofaces[static_cast<size_t>(eta)];
            require(cf.size() == 2, ErrorCode::InternalError, "subdivided surface is not closed");
            const auto [tau1, sign1] = cf[0];
            const auto [tau2, sign2] = cf[1];
            Int nu1 = bucket(tau1, t);
            Int nu2 = bucket(tau2, t) + shift_between(k, tau1, tau2, eta);
            chain(eta) = orientation[static_cast<size_t>(tau1)] * sign1 * nu1 +
                         orientation[static_cast<size_t>(tau2)] * sign2 * nu2;
        }
        return chain;
    }

    VecZ swept_chain(const Rat& t0, const Rat& t1) const {
        const SimplicialComplex& s = sd.complex;
        VecZ w = VecZ::Zero(s.count(2));
        for (Index tau = 0; tau < s.count(2); ++tau)
            w(tau) = orientation[static_cast<size_t>(tau)] * (bucket(tau, t1) - bucket(tau, t0));
        return w;
    }
};

}  // namespace

VecZ level_curve_subdivided(const SimplicialComplex& k, const Cochain& phi, const Rat& t) {
    require(k.dim == 2, ErrorCode::NotASurface, "subdivided level curves expect a surface");
    require(phi.ring == Ring::Integers, ErrorCode::RingMismatch,
            "subdivided level curves are integral");
    require_regular(t);
    VertexPotential pot = integrate_cocycle(k, phi);
    SubdividedLevel lvl(k, pot.normalized);
    VecZ chain = lvl.curve_chain(k, t);
    require(boundary_sparse(lvl.sd.complex, 1).apply(chain).isZero(0), ErrorCode::InternalError,
            "subdivided level curve is not a cycle");
    return chain;
}

CoboundingChain deform_level(const SimplicialComplex& k, const Cochain& phi, const Rat& t0,
                             const Rat& t1) {
    require(k.dim == 2, ErrorCode::NotASurface, "deform_level expects a surface");
    require(phi.ring == Ring::Integers, ErrorCode::RingMismatch,
            "deform_level works with integral cocycles");
    require_regular(t0);
    require_regular(t1);
    VertexPotential pot = integrate_cocycle(k, phi);
    SubdividedLevel lvl(k, pot.normalized);

    CoboundingChain out;
    out.t0 = t0;
    out.t1 = t1;
    out.curve0 = lvl.curve_chain(k, t0);
    out.curve1 = lvl.curve_chain(k, t1);
    out.w = lvl.swept_chain(t0, t1);
    VecZ bd = boundary_sparse(lvl.sd.complex, 2).apply(out.w);
    require(bd == out.curve1 - out.curve0, ErrorCode::InternalError,
            "cobounding chain boundary mismatch");

    // the two curves pair identically against every homology basis cycle
    NormalCurve c0 = level_curve(k, phi, t0);
    NormalCurve c1 = level_curve(k, phi, t1);
    HomologyGroup h1 = homology(k, 1, Ring::Integers);
    for (Index j = 0; j < h1.generator_count(); ++j) {
        Chain z{1, Ring::Integers, h1.generators.col(j)};
        require(intersection_number(k, c0, z) == intersection_number(k, c1, z),
                ErrorCode::InternalError, "deformation changed an intersection number");
    }
    return out;
}

NormalSurface level_surface_3d(const SimplicialComplex& k, const Cochain& phi, const Rat& t) {
    require(k.dim == 3, ErrorCode::NotAThreeManifold,
            "level_surface_3d expects a 3-dimensional complex");
    ManifoldCertificate cert = validate_closed_manifold(k);
    require(cert.is_closed_pseudomanifold, ErrorCode::NotClosed,
            "level_surface_3d expects a closed pseudomanifold");
    VertexPotential pot = normalize_cocycle(k, phi);
    require_regular(t);

    NormalSurface surf;
    surf.ring = phi.ring;
    surf.t = t;
    const Index ne = k.count(1);
    surf.edge_weights = VecZ::Zero(ne);
    surf.crossing_signs.assign(static_cast<size_t>(ne), 0);
    for (Index e = 0; e < ne; ++e) {
        const Int& w = pot.normalized(e);
        surf.edge_weights(e) = abs(w);
        surf.crossing_signs[static_cast<size_t>(e)] =
            surf.ring == Ring::Mod2 ? (surf.edge_weights(e) == 0 ? 0 : 1)
                                    : (w > 0 ? 1 : (w < 0 ? -1 : 0));
    }
    surf.crossing_offset.assign(static_cast<size_t>(ne) + 1, 0);
    for (Index e = 0; e < ne; ++e)
        surf.crossing_offset[static_cast<size_t>(e) + 1] =
            surf.crossing_offset[static_cast<size_t>(e)] +
            static_cast<Index>(surf.edge_weights(e).get_si());

    // face arcs per (face, both sides) for the matching invariant
    std::vector<std::vector<std::vector<std::pair<Index, long>>>> face_arcs(
        static_cast<size_t>(k.count(2)));

    for (Index tet = 0; tet < k.count(3); ++tet) {
        const Simplex& s = k.simplex(3, tet);
        VecZ g = local_potential(k, pot.normalized, surf.ring, 3, tet);

        auto edge_of = [&](int a, int b) {
            return k.index_of(1, {std::min(s[static_cast<size_t>(a)], s[static_cast<size_t>(b)]),
                                  std::max(s[static_cast<size_t>(a)], s[static_cast<size_t>(b)])});
        };
        auto corner_crossing = [&](int a, int b, const Int& sheet) -> std::pair<Index, long> {
            // crossing of the sheet on the edge between local corners a, b
            int lo_c = s[static_cast<size_t>(a)] < s[static_cast<size_t>(b)] ? a : b;
            int hi_c = lo_c == a ? b : a;
            Index e = edge_of(a, b);
            Int w = g(hi_c) - g(lo_c);
            Int m_e = sheet - g(lo_c);
            return {e, crossing_slot(w, m_e)};
        };

        std::vector<Int> sheets;
        if (surf.ring == Ring::Integers) {
            Int lo = g.minCoeff(), hi = g.maxCoeff();
            for (Int m = lo; m < hi; ++m) sheets.push_back(m);
        } else {
            bool any0 = false, any1 = false;
            for (Index j = 0; j < 4; ++j) (mod2(g(j)) == 0 ? any0 : any1) = true;
            if (any0 && any1) sheets.push_back(0);
        }

        int quad_type_seen = -1;
        for (const Int& m : sheets) {
            std::vector<int> below, above;
            for (int j = 0; j < 4; ++j) {
                bool is_below = surf.ring == Ring::Integers ? (g(j) <= m) : (mod2(g(j)) == 0);
                (is_below ? below : above).push_back(j);
            }
            NormalSurface::Patch patch;
            patch.tet = tet;
            patch.sheet = m.get_si();
            if (below.size() == 1 || below.size() == 3) {
                patch.kind = NormalSurface::PatchKind::Triangle;
                patch.cut_corner = below.size() == 1 ? below[0] : above[0];
                const auto& others = below.size() == 1 ? above : below;
                for (int o : others)
                    patch.corners.push_back(corner_crossing(patch.cut_corner, o, m));
            } else {
                require(below.size() == 2, ErrorCode::InternalError,
                        "sheet separates no corners");
                patch.kind = NormalSurface::PatchKind::Quad;
                int p = below[0], q = below[1];
                int r = above[0], sss = above[1];
                // pair encoding by the partner of corner 0
                int partner = (p == 0) ? q : (r == 0 ? sss : -1);
                if (p != 0 && r != 0) partner = -1;
                require(partner > 0, ErrorCode::InternalError, "corner 0 must be in some pair");
                patch.quad_pair = partner - 1;
                patch.corners.push_back(corner_crossing(p, r, m));
                patch.corners.push_back(corner_crossing(p, sss, m));
                patch.corners.push_back(corner_crossing(q, sss, m));
                patch.corners.push_back(corner_crossing(q, r, m));
                if (quad_type_seen < 0) quad_type_seen = patch.quad_pair;
                require(quad_type_seen == patch.quad_pair, ErrorCode::InternalError,
                        "two quadrilateral types inside one tetrahedron");
            }
            surf.patches.push_back(std::move(patch));

            // induced arcs on the four faces, recorded for the matching check
            for (int skip = 0; skip < 4; ++skip) {
                std::array<int, 3> fc{};
                int w = 0;
                for (int j = 0; j < 4; ++j)
                    if (j != skip) fc[static_cast<size_t>(w++)] = j;
                Simplex face = {s[static_cast<size_t>(fc[0])], s[static_cast<size_t>(fc[1])],
                                s[static_cast<size_t>(fc[2])]};
                Index fi = k.index_of(2, face);
                std::vector<std::pair<Index, long>> ends;
                for (int a = 0; a < 3; ++a)
                    for (int b = a + 1; b < 3; ++b) {
                        bool xa = surf.ring == Ring::Integers ? (g(fc[static_cast<size_t>(a)]) <= m)
                                                              : (mod2(g(fc[static_cast<size_t>(a)])) == 0);
                        bool xb = surf.ring == Ring::Integers ? (g(fc[static_cast<size_t>(b)]) <= m)
                                                              : (mod2(g(fc[static_cast<size_t>(b)])) == 0);
                        if (xa != xb)
                            ends.push_back(
                                corner_crossing(fc[static_cast<size_t>(a)], fc[static_cast<size_t>(b)], m));
                    }
                if (ends.empty()) continue;
                require(ends.size() == 2, ErrorCode::FaceMatchingFailure,
                        "sheet crosses a face in other than two edges");
                std::sort(ends.begin(), ends.end());
                face_arcs[static_cast<size_t>(fi)].push_back(
                    {ends[0], ends[1]});
            }
        }
    }

    // matching: each face receives its arcs twice, once per side
    for (Index f = 0; f < k.count(2); ++f) {
        auto arcs = face_arcs[static_cast<size_t>(f)];
        std::sort(arcs.begin(), arcs.end());
        require(arcs.size() % 2 == 0, ErrorCode::FaceMatchingFailure,
                "face arc multiset has odd size");
        for (size_t i = 0; i < arcs.size(); i += 2)
            require(arcs[i] == arcs[i + 1], ErrorCode::FaceMatchingFailure,
                    "induced face arcs disagree between the two sides");
    }
    return surf;
}

}  // namespace capdual
