#include "capdual/duality.hpp"

#include <algorithm>

namespace capdual {

namespace {

inline Int mod2(const Int& x) { return Int(mpz_odd_p(x.get_mpz_t()) ? 1 : 0); }

inline MatZ mod2_mat(MatZ m) {
    for (Index r = 0; r < m.rows(); ++r)
        for (Index c = 0; c < m.cols(); ++c) m(r, c) = mod2(m(r, c));
    return m;
}

bool same_type(const HomologyGroup& a, const HomologyGroup& b) {
    if (a.betti != b.betti) return false;
    std::vector<Int> ta = a.torsion, tb = b.torsion;
    std::sort(ta.begin(), ta.end());
    std::sort(tb.begin(), tb.end());
    return ta == tb;
}

void check_preconditions(const ManifoldCertificate& cert, Ring ring) {
    require(cert.is_closed_pseudomanifold, ErrorCode::NotClosed,
            "duality requires a closed pseudomanifold");
    require(cert.is_connected, ErrorCode::NotConnected, "duality requires a connected complex");
    if (ring == Ring::Integers)
        require(cert.orientable, ErrorCode::NotOrientable,
                "integral duality requires an orientable manifold");
}

DualityReport::Row make_row(int degree, const HomologyGroup& source, const HomologyGroup& target,
                            const InducedMap& ind) {
    DualityReport::Row row;
    row.degree = degree;
    row.source_betti = source.betti;
    row.source_torsion = source.torsion;
    row.target_betti = target.betti;
    row.target_torsion = target.torsion;
    SnfOptions none;
    none.want_u = none.want_v = false;
    row.invariant_factors = smith_normal_form(ind.matrix, none).invariant_factors;
    row.iso = ind.iso;
    return row;
}

}  // namespace

Chain cap_chain(const SimplicialComplex& k, const Chain& c, const Cochain& phi) {
    require(c.ring == phi.ring, ErrorCode::RingMismatch, "cap with mismatched rings");
    const int d = c.degree, kk = phi.degree;
    require(0 <= kk && kk <= d && d <= k.dim, ErrorCode::DegreeMismatch,
            "cap degrees out of range");
    require(c.values.size() == k.count(d) && phi.values.size() == k.count(kk),
            ErrorCode::DegreeMismatch, "cap operand sizes");

    Chain out;
    out.degree = d - kk;
    out.ring = c.ring;
    out.values = VecZ::Zero(k.count(d - kk));
    Simplex front, back;
    for (Index i = 0; i < k.count(d); ++i) {
        if (c.values(i) == 0) continue;
        const Simplex& s = k.simplex(d, i);
        front.assign(s.begin(), s.begin() + kk + 1);
        back.assign(s.begin() + kk, s.end());
        Index fi = k.index_of(kk, front);
        Index bi = k.index_of(d - kk, back);
        require(fi >= 0 && bi >= 0, ErrorCode::InternalError, "cap face lookup failed");
        if (phi.values(fi) == 0) continue;
        out.values(bi) += c.values(i) * phi.values(fi);
    }
    if (out.ring == Ring::Mod2)
        for (Index i = 0; i < out.values.size(); ++i) out.values(i) = mod2(out.values(i));
    return out;
}

SparseIntMatrix cap_matrix(const SimplicialComplex& k, const VecZ& fundamental, int degree,
                           Ring ring) {
    const int n = k.dim;
    SparseIntMatrix m(k.count(n - degree), k.count(degree));
    Simplex front, back;
    for (Index i = 0; i < k.count(n); ++i) {
        if (fundamental(i) == 0) continue;
        const Simplex& s = k.simplex(n, i);
        front.assign(s.begin(), s.begin() + degree + 1);
        back.assign(s.begin() + degree, s.end());
        Index fi = k.index_of(degree, front);
        Index bi = k.index_of(n - degree, back);
        require(fi >= 0 && bi >= 0, ErrorCode::InternalError, "cap face lookup failed");
        Int co = fundamental(i);
        if (ring == Ring::Mod2) co = mod2(co);
        if (co != 0) m.add(bi, fi, co);
    }
    return m;
}

InducedMap induced_on_homology(const HomologyGroup& source, const HomologyGroup& target,
                               const MatZ& image_chains) {
    require(image_chains.cols() == source.generator_count(), ErrorCode::DegreeMismatch,
            "one image column per source generator expected");
    InducedMap ind;
    ind.types_match = same_type(source, target);

    const Index s = source.generator_count();
    const Index z = target.cycle_dim;
    ind.matrix = MatZ::Zero(target.generator_count(), s);
    MatZ kernel_coords = MatZ::Zero(z, s);
    for (Index j = 0; j < s; ++j) {
        VecZ img = image_chains.col(j);
        kernel_coords.col(j) = target.kernel_coordinates(img);
        auto coords = target.class_coordinates(img);
        for (Index b = 0; b < target.betti; ++b) ind.matrix(b, j) = coords.free(b);
        for (Index t = 0; t < static_cast<Index>(target.torsion.size()); ++t)
            ind.matrix(target.betti + t, j) = coords.torsion_part(t);
    }

    if (target.ring == Ring::Integers) {
        // surjective iff the image coordinates together with the relation
        // lattice generate all of the cycle-coordinate space
        MatZ ww = target.u_r * kernel_coords;
        MatZ aug = MatZ::Zero(z, s + target.rel_rank);
        aug.leftCols(s) = ww;
        for (Index i = 0; i < target.rel_rank; ++i)
            aug(i, s + i) = target.rel_factors[static_cast<size_t>(i)];
        SnfOptions none;
        none.want_u = none.want_v = false;
        ind.surjectivity_snf = smith_normal_form(aug, none);
        ind.surjective =
            ind.surjectivity_snf.rank() == z && ind.surjectivity_snf.all_factors_one();
    } else {
        MatZ rel = target.rel_reducer.basis_columns();
        MatZ aug = MatZ::Zero(z, s + rel.cols());
        aug.leftCols(s) = kernel_coords;
        aug.rightCols(rel.cols()) = rel;
        ind.mod2_rank = GF2Matrix::from_integer(aug).rank();
        ind.mod2_needed = z;
        ind.surjective = ind.mod2_rank == z;
    }
    ind.iso = ind.types_match && ind.surjective;
    return ind;
}

DualityMap duality_map(const SimplicialComplex& k, const ManifoldCertificate& cert, Ring ring,
                       int degree) {
    check_preconditions(cert, ring);
    DualityMap dm;
    dm.degree = degree;
    dm.ring = ring;
    const int n = k.dim;
    if (degree < 0 || degree > n) {
        // degenerate degrees act on zero-dimensional spaces
        dm.source.degree = degree;
        dm.source.ring = ring;
        dm.target.degree = n - degree;
        dm.target.ring = ring;
        dm.induced.types_match = dm.induced.surjective = dm.induced.iso = true;
        dm.iso = true;
        return dm;
    }
    FundamentalClass fc = fundamental_class(k, cert, ring);
    SparseIntMatrix capm = cap_matrix(k, fc.chain, degree, ring);
    dm.chain_matrix = ring == Ring::Mod2 ? mod2_mat(capm.dense()) : capm.dense();
    dm.source = cohomology(k, degree, ring);
    dm.target = homology(k, n - degree, ring);

    MatZ images = capm.apply(dm.source.generators);
    for (Index j = 0; j < images.cols(); ++j)
        require(dm.target.is_cycle_vector(images.col(j)), ErrorCode::InternalError,
                "cap image of a cocycle is not a cycle");
    dm.induced = induced_on_homology(dm.source, dm.target, images);
    dm.iso = dm.induced.iso;
    return dm;
}

DualityReport verify_duality(const SimplicialComplex& k, const ManifoldCertificate& cert,
                             Ring ring) {
    check_preconditions(cert, ring);
    DualityReport report;
    report.ring = ring;
    report.route = "cap";
    report.pass = true;
    const int n = k.dim;
    FundamentalClass fc = fundamental_class(k, cert, ring);
    for (int degree = 0; degree <= n; ++degree) {
        SparseIntMatrix capm = cap_matrix(k, fc.chain, degree, ring);
        HomologyGroup source = cohomology(k, degree, ring);
        HomologyGroup target = homology(k, n - degree, ring);
        MatZ images = capm.apply(source.generators);
        for (Index j = 0; j < images.cols(); ++j)
            require(target.is_cycle_vector(images.col(j)), ErrorCode::InternalError,
                    "cap image of a cocycle is not a cycle");
        InducedMap ind = induced_on_homology(source, target, images);
        report.rows.push_back(make_row(degree, source, target, ind));
        report.pass = report.pass && ind.iso;
    }
    return report;
}

DualityReport verify_duality_dual_route(const SimplicialComplex& k,
                                        const ManifoldCertificate& cert, Ring ring) {
    check_preconditions(cert, ring);
    DualityReport report;
    report.ring = ring;
    report.route = "dual-cells";
    report.pass = true;
    const int n = k.dim;
    DualComplex dual = dual_complex(k, cert);
    dual_correspondence(k, dual, ring);  // validates the chain-map identity
    for (int degree = 0; degree <= n; ++degree) {
        HomologyGroup source = cohomology(k, degree, ring);
        HomologyGroup target = dual_homology(dual, n - degree, ring);
        // the correspondence is the identity pattern on coefficient vectors
        InducedMap ind = induced_on_homology(source, target, source.generators);
        report.rows.push_back(make_row(degree, source, target, ind));
        report.pass = report.pass && ind.iso;
    }
    return report;
}

}  // namespace capdual
