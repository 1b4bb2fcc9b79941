#include "capdual/chain_algebra.hpp"

#include <algorithm>

namespace capdual {

namespace {

inline Int mod2(const Int& x) { return Int(mpz_odd_p(x.get_mpz_t()) ? 1 : 0); }

inline VecZ mod2_vec(VecZ v) {
    for (Index i = 0; i < v.size(); ++i) v(i) = mod2(v(i));
    return v;
}

}  // namespace

SparseIntMatrix boundary_sparse(const SimplicialComplex& k, int degree) {
    const Index rows = k.count(degree - 1);
    const Index cols = k.count(degree);
    SparseIntMatrix m(rows, cols);
    if (degree < 1 || degree > k.dim) return m;
    for (Index j = 0; j < cols; ++j)
        for (const auto& [f, s] : k.facets_with_signs(degree, j)) m.add(f, j, Int(s));
    return m;
}

MatZ boundary_matrix(const SimplicialComplex& k, int degree, Ring ring) {
    require(degree >= 1 && degree <= k.dim, ErrorCode::DegreeOutOfRange,
            "boundary degree must be between 1 and the complex dimension");
    MatZ m = boundary_sparse(k, degree).dense();
    if (ring == Ring::Mod2)
        for (Index r = 0; r < m.rows(); ++r)
            for (Index c = 0; c < m.cols(); ++c) m(r, c) = mod2(m(r, c));
    return m;
}

MatZ coboundary_matrix(const SimplicialComplex& k, int degree, Ring ring) {
    require(degree >= 0 && degree < k.dim, ErrorCode::DegreeOutOfRange,
            "coboundary degree must be between 0 and dim-1");
    MatZ m = boundary_sparse(k, degree + 1).transpose().dense();
    if (ring == Ring::Mod2)
        for (Index r = 0; r < m.rows(); ++r)
            for (Index c = 0; c < m.cols(); ++c) m(r, c) = mod2(m(r, c));
    return m;
}

bool is_cycle(const SimplicialComplex& k, const Chain& c) {
    require(c.values.size() == k.count(c.degree), ErrorCode::DegreeMismatch,
            "chain length does not match simplex count");
    VecZ b = boundary_sparse(k, c.degree).apply(c.values);
    if (c.ring == Ring::Mod2) b = mod2_vec(b);
    return b.isZero(0);
}

bool is_cocycle(const SimplicialComplex& k, const Cochain& phi) {
    require(phi.values.size() == k.count(phi.degree), ErrorCode::DegreeMismatch,
            "cochain length does not match simplex count");
    VecZ d = boundary_sparse(k, phi.degree + 1).transpose().apply(phi.values);
    if (phi.ring == Ring::Mod2) d = mod2_vec(d);
    return d.isZero(0);
}

Int evaluate(const Cochain& phi, const Chain& c) {
    require(phi.degree == c.degree, ErrorCode::DegreeMismatch,
            "cochain and chain degrees differ");
    require(phi.ring == c.ring, ErrorCode::RingMismatch, "cochain and chain rings differ");
    require(phi.values.size() == c.values.size(), ErrorCode::DegreeMismatch,
            "cochain and chain lengths differ");
    Int s = 0;
    for (Index i = 0; i < phi.values.size(); ++i) s += phi.values(i) * c.values(i);
    return phi.ring == Ring::Mod2 ? mod2(s) : s;
}

bool HomologyGroup::ClassCoordinates::is_zero() const {
    return free.isZero(0) && torsion_part.isZero(0);
}

bool HomologyGroup::is_cycle_vector(const VecZ& v) const {
    if (v.size() != space_dim) return false;
    VecZ b = cycle_check.apply(v);
    if (ring == Ring::Mod2) b = mod2_vec(b);
    return b.isZero(0);
}

VecZ HomologyGroup::kernel_coordinates(const VecZ& cycle) const {
    require(is_cycle_vector(cycle), ErrorCode::NotACycle,
            "class coordinates of a non-cycle requested");
    if (ring == Ring::Integers) return vinv_trail * cycle;
    VecZ y = VecZ::Zero(cycle_dim);
    std::vector<uint64_t> target = GF2Matrix::pack(cycle);
    std::vector<uint64_t> recon(target.size(), 0);
    for (Index j = 0; j < cycle_dim; ++j) {
        y(j) = mod2(cycle(kernel_free_rows[static_cast<size_t>(j)]));
        if (y(j) == 1) kernel_rows.xor_row_into(j, recon);
    }
    // a mod-2 cycle must reconstruct exactly from its free coordinates
    require(recon == target, ErrorCode::InternalError, "mod-2 kernel coordinates failed");
    return y;
}

HomologyGroup::ClassCoordinates HomologyGroup::class_coordinates(const VecZ& cycle) const {
    ClassCoordinates out;
    VecZ y = kernel_coordinates(cycle);
    if (ring == Ring::Integers) {
        VecZ w = u_r * y;
        out.free = VecZ::Zero(betti);
        for (Index j = 0; j < betti; ++j) out.free(j) = w(rel_rank + j);
        out.torsion_part = VecZ::Zero(static_cast<Index>(torsion.size()));
        for (size_t i = 0; i < torsion_rows.size(); ++i) {
            Int r;
            mpz_fdiv_r(r.get_mpz_t(), w(torsion_rows[i]).get_mpz_t(), torsion[i].get_mpz_t());
            out.torsion_part(static_cast<Index>(i)) = r;
        }
    } else {
        VecZ reduced = rel_reducer.reduce(y);
        out.free = VecZ::Zero(betti);
        for (Index j = 0; j < betti; ++j) out.free(j) = reduced(mod2_free_coords[static_cast<size_t>(j)]);
        out.torsion_part = VecZ::Zero(0);
    }
    return out;
}

HomologyGroup subquotient_group(const SparseIntMatrix& a, const SparseIntMatrix& b, int degree,
                                Ring ring) {
    require(a.cols == b.rows, ErrorCode::DegreeMismatch, "subquotient shape mismatch");
    HomologyGroup g;
    g.degree = degree;
    g.ring = ring;
    g.space_dim = a.cols;
    g.cycle_check = a;

    if (ring == Ring::Integers) {
        SnfOptions opt;
        opt.want_u = false;
        opt.want_v = true;
        opt.want_v_inv = true;
        SnfCertificate snf_a = smith_normal_form(a.dense(), opt);
        const Index z = a.cols - snf_a.rank();
        g.cycle_dim = z;
        g.kernel_basis = snf_a.v.rightCols(z);
        g.vinv_trail = snf_a.v_inv.bottomRows(z);

        MatZ rel = b.apply_left(g.vinv_trail);  // z x m, relations in kernel coordinates
        SnfOptions ropt;
        ropt.want_u = true;
        ropt.want_u_inv = true;
        ropt.want_v = false;
        SnfCertificate snf_r = smith_normal_form(rel, ropt);
        g.u_r = snf_r.u;
        g.rel_rank = snf_r.rank();
        g.rel_factors = snf_r.invariant_factors;
        g.betti = z - g.rel_rank;
        for (Index i = 0; i < g.rel_rank; ++i)
            if (snf_r.invariant_factors[static_cast<size_t>(i)] > 1) {
                g.torsion.push_back(snf_r.invariant_factors[static_cast<size_t>(i)]);
                g.torsion_rows.push_back(i);
            }
        g.generators = MatZ::Zero(g.space_dim, g.generator_count());
        for (Index j = 0; j < g.betti; ++j)
            g.generators.col(j) = g.kernel_basis * snf_r.u_inv.col(g.rel_rank + j);
        for (size_t i = 0; i < g.torsion_rows.size(); ++i)
            g.generators.col(g.betti + static_cast<Index>(i)) =
                g.kernel_basis * snf_r.u_inv.col(g.torsion_rows[i]);
    } else {
        GF2Matrix ga = GF2Matrix::from_sparse(a);
        std::vector<Index> free_cols;
        g.kernel_basis = ga.kernel_basis(&free_cols);
        g.kernel_free_rows = std::move(free_cols);
        const Index z = g.kernel_basis.cols();
        g.cycle_dim = z;
        g.kernel_rows = GF2Matrix(z, g.space_dim);
        for (Index j = 0; j < z; ++j)
            for (Index r = 0; r < g.space_dim; ++r)
                if (g.kernel_basis(r, j) == 1) g.kernel_rows.set(j, r, true);

        // relations: kernel coordinates of the columns of b
        MatZ rel = MatZ::Zero(z, b.cols);
        const size_t words = static_cast<size_t>((g.space_dim + 63) / 64);
        std::vector<uint64_t> col_bits(words), recon(words);
        for (Index c = 0; c < b.cols; ++c) {
            std::fill(col_bits.begin(), col_bits.end(), 0);
            std::fill(recon.begin(), recon.end(), 0);
            for (const auto& [r, v] : b.entries[static_cast<size_t>(c)])
                if (mpz_odd_p(v.get_mpz_t()))
                    col_bits[static_cast<size_t>(r >> 6)] ^= uint64_t(1) << (r & 63);
            for (Index j = 0; j < z; ++j) {
                Index pos = g.kernel_free_rows[static_cast<size_t>(j)];
                if ((col_bits[static_cast<size_t>(pos >> 6)] >> (pos & 63)) & 1u) {
                    rel(j, c) = 1;
                    g.kernel_rows.xor_row_into(j, recon);
                }
            }
            require(recon == col_bits, ErrorCode::InternalError,
                    "mod-2 relation is not in the cycle space");
        }
        g.rel_reducer = GF2Reducer(rel);
        g.rel_rank = g.rel_reducer.dim();
        g.betti = z - g.rel_rank;
        std::vector<bool> is_pivot(static_cast<size_t>(z), false);
        for (Index p : g.rel_reducer.pivots()) is_pivot[static_cast<size_t>(p)] = true;
        for (Index j = 0; j < z; ++j)
            if (!is_pivot[static_cast<size_t>(j)]) g.mod2_free_coords.push_back(j);
        g.generators = MatZ::Zero(g.space_dim, g.betti);
        for (Index j = 0; j < g.betti; ++j)
            g.generators.col(j) = g.kernel_basis.col(g.mod2_free_coords[static_cast<size_t>(j)]);
    }
    return g;
}

HomologyGroup homology(const SimplicialComplex& k, int degree, Ring ring) {
    if (degree < 0 || degree > k.dim) {
        HomologyGroup g;
        g.degree = degree;
        g.ring = ring;
        return g;
    }
    return subquotient_group(boundary_sparse(k, degree), boundary_sparse(k, degree + 1), degree,
                             ring);
}

HomologyGroup cohomology(const SimplicialComplex& k, int degree, Ring ring) {
    if (degree < 0 || degree > k.dim) {
        HomologyGroup g;
        g.degree = degree;
        g.ring = ring;
        return g;
    }
    return subquotient_group(boundary_sparse(k, degree + 1).transpose(),
                             boundary_sparse(k, degree).transpose(), degree, ring);
}

}  // namespace capdual
