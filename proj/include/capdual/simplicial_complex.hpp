#pragma once

#include <string>
#include <utility>
#include <vector>

#include "capdual/types.hpp"

namespace capdual {

/// A simplex is a strictly increasing tuple of dense vertex indices.
using Simplex = std::vector<int>;

/// Finite simplicial complex, closed under faces, with the canonical
/// lexicographic ordering of simplices in every dimension. That ordering
/// fixes the row/column indexing of every matrix in the pipeline, which is
/// what makes all downstream output deterministic.
struct SimplicialComplex {
    int dim = -1;
    int vertex_count = 0;
    std::vector<std::vector<Simplex>> simplices;  // [k] -> lex-sorted k-simplices
    std::vector<long> vertex_labels;              // dense index -> original input label

    Index count(int k) const {
        if (k < 0 || k > dim) return 0;
        return static_cast<Index>(simplices[static_cast<size_t>(k)].size());
    }
    const Simplex& simplex(int k, Index i) const {
        return simplices[static_cast<size_t>(k)][static_cast<size_t>(i)];
    }
    /// Index of a sorted vertex tuple in degree k, or -1 if absent.
    Index index_of(int k, const Simplex& s) const;

    std::vector<Index> f_vector() const;
    long euler_characteristic() const;

    /// The facets of simplex (k, i) with the alternating boundary signs:
    /// entry j is (index of the face dropping vertex j, (-1)^j).
    std::vector<std::pair<Index, int>> facets_with_signs(int k, Index i) const;
};

/// Face-closes a set of top-dimensional simplices. Input tuples may use
/// sparse vertex labels and arbitrary order inside each tuple; vertices are
/// re-indexed densely (the mapping is kept in vertex_labels).
SimplicialComplex build_complex(const std::vector<std::vector<long>>& top_simplices);

/// Convenience overload for dense int input.
SimplicialComplex build_complex_int(const std::vector<Simplex>& top_simplices);

struct Diagnostic {
    int dim;
    Index index;
    std::string reason;
};

struct ManifoldCertificate {
    bool is_closed_pseudomanifold = false;
    bool is_connected = false;
    bool orientable = false;
    std::vector<int> orientation;  // per top simplex, +1/-1, present iff orientable
    std::vector<Diagnostic> failures;
};

/// Closed-pseudomanifold / connectivity / orientability certificate.
/// Orientation is propagated across the dual graph from the lexicographically
/// first top simplex (sign +1); orientable iff propagation closes without
/// contradiction. Failures are reported in the certificate, never thrown.
ManifoldCertificate validate_closed_manifold(const SimplicialComplex& k);

struct FundamentalClass {
    Ring ring = Ring::Integers;
    VecZ chain;  // indexed by top simplices; 0/1 entries for Mod2
};

FundamentalClass fundamental_class(const SimplicialComplex& k, const ManifoldCertificate& cert,
                                   Ring ring);

/// Barycentric subdivision together with the vertex provenance map.
struct Subdivision {
    SimplicialComplex complex;
    std::vector<std::pair<int, Index>> vertex_origin;  // Sd-vertex -> (dim, index) in K
    std::vector<std::vector<Index>> vertex_of;         // [k][i] -> Sd-vertex of simplex (k,i)
};

/// One new vertex per simplex; k-simplices of the subdivision are the flags
/// (chains of strictly nested simplices) of length k+1.
Subdivision barycentric_subdivision(const SimplicialComplex& k);

}  // namespace capdual
