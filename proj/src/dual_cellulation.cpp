#include "capdual/dual_cellulation.hpp"

#include <algorithm>

namespace capdual {

namespace {

inline Int mod2(const Int& x) { return Int(mpz_odd_p(x.get_mpz_t()) ? 1 : 0); }

/// Parity sign of the permutation sorting `seq` ascending (entries distinct).
int sort_sign(std::vector<int> seq) {
    int inversions = 0;
    for (size_t i = 0; i < seq.size(); ++i)
        for (size_t j = i + 1; j < seq.size(); ++j)
            if (seq[i] > seq[j]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace

SparseIntMatrix DualComplex::boundary(int k) const {
    if (k >= 1 && k <= n) return incidence[static_cast<size_t>(k)];
    if (k == 0) return SparseIntMatrix(0, cell_count(0));
    if (k == n + 1) return SparseIntMatrix(cell_count(n), 0);
    return SparseIntMatrix(0, 0);
}

DualComplex dual_complex(const SimplicialComplex& k, const ManifoldCertificate& cert) {
    require(cert.is_closed_pseudomanifold, ErrorCode::NotClosed,
            "dual cellulation requires a closed pseudomanifold");
    DualComplex dual;
    dual.n = k.dim;
    dual.ring = cert.orientable ? Ring::Integers : Ring::Mod2;
    dual.sd = barycentric_subdivision(k);
    const int n = k.dim;
    const SimplicialComplex& sd = dual.sd.complex;

    // one dual (n-m)-cell per m-simplex
    dual.cells.resize(static_cast<size_t>(n) + 1);
    for (int kk = 0; kk <= n; ++kk) {
        int m = n - kk;
        auto& layer = dual.cells[static_cast<size_t>(kk)];
        layer.resize(static_cast<size_t>(k.count(m)));
        for (Index i = 0; i < k.count(m); ++i) {
            layer[static_cast<size_t>(i)].center_dim = m;
            layer[static_cast<size_t>(i)].center_index = i;
        }
    }

    // classify every Sd-simplex by its flag; dual blocks take the flags whose
    // dimensions run consecutively from dim(center) up to n
    for (int kk = 0; kk <= n; ++kk) {
        const int m = n - kk;
        for (Index si = 0; si < sd.count(kk); ++si) {
            const Simplex& flag = sd.simplex(kk, si);
            bool ascending = true;
            for (size_t j = 0; j < flag.size(); ++j) {
                int d = dual.sd.vertex_origin[static_cast<size_t>(flag[j])].first;
                if (d != m + static_cast<int>(j)) {
                    ascending = false;
                    break;
                }
            }
            if (!ascending || dual.sd.vertex_origin[static_cast<size_t>(flag.back())].first != n)
                continue;

            const auto [cdim, cidx] = dual.sd.vertex_origin[static_cast<size_t>(flag.front())];
            Int coeff = 1;
            if (dual.ring == Ring::Integers) {
                // orientation of the block: sign of the top simplex times the
                // parity of merging the added vertices into sorted order
                std::vector<int> seq = k.simplex(cdim, cidx);
                Simplex prev = k.simplex(cdim, cidx);
                for (size_t j = 1; j < flag.size(); ++j) {
                    const auto [dj, ij] = dual.sd.vertex_origin[static_cast<size_t>(flag[j])];
                    const Simplex& cur = k.simplex(dj, ij);
                    int added = -1;
                    for (int v : cur)
                        if (!std::binary_search(prev.begin(), prev.end(), v)) {
                            added = v;
                            break;
                        }
                    require(added >= 0, ErrorCode::InternalError, "flag step adds no vertex");
                    seq.push_back(added);
                    prev = cur;
                }
                const auto [tdim, tidx] = dual.sd.vertex_origin[static_cast<size_t>(flag.back())];
                (void)tdim;
                coeff = cert.orientation[static_cast<size_t>(tidx)] * sort_sign(seq);
            }
            dual.cells[static_cast<size_t>(kk)][static_cast<size_t>(cidx)].chain.emplace_back(
                si, coeff);
        }
        for (const DualCell& cell : dual.cells[static_cast<size_t>(kk)])
            require(!cell.chain.empty(), ErrorCode::InternalError, "empty dual block");
    }

    // cofaces in K: for each m-simplex, the (m+1)-simplices containing it
    std::vector<std::vector<std::vector<Index>>> cofaces(static_cast<size_t>(n));
    for (int m = 0; m < n; ++m) {
        cofaces[static_cast<size_t>(m)].resize(static_cast<size_t>(k.count(m)));
        for (Index t = 0; t < k.count(m + 1); ++t)
            for (const auto& [f, s] : k.facets_with_signs(m + 1, t))
                cofaces[static_cast<size_t>(m)][static_cast<size_t>(f)].push_back(t);
    }

    // incidence: express the boundary of each block over the blocks of the
    // center's cofaces; the decomposition must be exact
    dual.incidence.resize(static_cast<size_t>(n) + 1);
    for (int kk = 1; kk <= n; ++kk) {
        const int m = n - kk;
        SparseIntMatrix inc(k.count(m + 1), k.count(m));
        SparseIntMatrix bd = boundary_sparse(sd, kk);
        for (Index ci = 0; ci < k.count(m); ++ci) {
            const DualCell& cell = dual.cells[static_cast<size_t>(kk)][static_cast<size_t>(ci)];
            VecZ rest = VecZ::Zero(sd.count(kk - 1));
            for (const auto& [si, co] : cell.chain)
                for (const auto& [f, s] : bd.entries[static_cast<size_t>(si)]) rest(f) += s * co;
            if (dual.ring == Ring::Mod2)
                for (Index i = 0; i < rest.size(); ++i) rest(i) = mod2(rest(i));
            for (Index tau : cofaces[static_cast<size_t>(m)][static_cast<size_t>(ci)]) {
                const DualCell& sub =
                    dual.cells[static_cast<size_t>(kk) - 1][static_cast<size_t>(tau)];
                const auto& [si0, a0] = sub.chain.front();
                Int c = rest(si0);
                if (dual.ring == Ring::Integers) {
                    // a0 is +-1
                    c = a0 == 1 ? c : Int(-c);
                }
                if (c == 0) continue;
                for (const auto& [si, co] : sub.chain) {
                    rest(si) -= c * co;
                    if (dual.ring == Ring::Mod2) rest(si) = mod2(rest(si));
                }
                inc.add(tau, ci, c);
            }
            require(rest.isZero(0), ErrorCode::InternalError,
                    "dual block boundary does not decompose over coface blocks");
        }
        dual.incidence[static_cast<size_t>(kk)] = std::move(inc);
    }

    // incidence composes to zero
    for (int kk = 2; kk <= n; ++kk) {
        const SparseIntMatrix& hi = dual.incidence[static_cast<size_t>(kk)];
        const SparseIntMatrix& lo = dual.incidence[static_cast<size_t>(kk) - 1];
        for (Index c = 0; c < hi.cols; ++c) {
            VecZ col = VecZ::Zero(hi.rows);
            for (const auto& [r, v] : hi.entries[static_cast<size_t>(c)]) col(r) += v;
            VecZ comp = lo.apply(col);
            if (dual.ring == Ring::Mod2)
                for (Index i = 0; i < comp.size(); ++i) comp(i) = mod2(comp(i));
            require(comp.isZero(0), ErrorCode::InternalError, "dual incidence does not square to zero");
        }
    }

    // cell-count bijection and Euler characteristic
    long chi = 0;
    for (int kk = 0; kk <= n; ++kk) {
        require(dual.cell_count(kk) == k.count(n - kk), ErrorCode::InternalError,
                "dual cell count bijection failed");
        chi += (kk % 2 == 0 ? 1 : -1) * static_cast<long>(dual.cell_count(kk));
    }
    require(chi == k.euler_characteristic(), ErrorCode::InternalError,
            "dual complex Euler characteristic mismatch");
    return dual;
}

DualCorrespondence dual_correspondence(const SimplicialComplex& k, const DualComplex& dual,
                                       Ring ring) {
    require(!(ring == Ring::Integers && dual.ring == Ring::Mod2), ErrorCode::NotOrientable,
            "integral dual correspondence requires an orientable manifold");
    DualCorrespondence corr;
    corr.ring = ring;
    corr.n = k.dim;
    const int n = k.dim;

    // T is the identity pattern, so the chain-map identity is the statement
    // that incidence[n-deg] equals eps * transpose(boundary_{deg+1}) entrywise.
    for (int deg = 0; deg < n; ++deg) {
        const SparseIntMatrix& inc = dual.incidence[static_cast<size_t>(n - deg)];
        SparseIntMatrix delta = boundary_sparse(k, deg + 1).transpose();
        require(inc.rows == delta.rows && inc.cols == delta.cols, ErrorCode::InternalError,
                "dual correspondence shape mismatch");
        int eps = 0;
        MatZ a = inc.dense();
        MatZ b = delta.dense();
        for (Index r = 0; r < a.rows() && eps == 0; ++r)
            for (Index c = 0; c < a.cols() && eps == 0; ++c) {
                Int x = ring == Ring::Mod2 ? mod2(a(r, c)) : a(r, c);
                Int y = ring == Ring::Mod2 ? mod2(b(r, c)) : b(r, c);
                if (y != 0) eps = (x == y) ? 1 : (x == -y ? -1 : 0);
            }
        if (eps == 0) eps = 1;  // no incidences in this degree
        for (Index r = 0; r < a.rows(); ++r)
            for (Index c = 0; c < a.cols(); ++c) {
                Int x = ring == Ring::Mod2 ? mod2(a(r, c)) : a(r, c);
                Int y = ring == Ring::Mod2 ? mod2(b(r, c)) : b(r, c);
                require(x == eps * y, ErrorCode::InternalError,
                        "dual correspondence is not a chain map with a per-degree sign");
            }
        corr.epsilon.push_back(ring == Ring::Mod2 ? 1 : eps);
    }
    return corr;
}

HomologyGroup dual_homology(const DualComplex& dual, int degree, Ring ring) {
    if (degree < 0 || degree > dual.n) {
        HomologyGroup g;
        g.degree = degree;
        g.ring = ring;
        return g;
    }
    return subquotient_group(dual.boundary(degree), dual.boundary(degree + 1), degree, ring);
}

}  // namespace capdual
