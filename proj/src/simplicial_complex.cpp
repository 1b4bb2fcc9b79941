#include "capdual/simplicial_complex.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace capdual {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::MixedDimension: return "MixedDimension";
        case ErrorCode::DegenerateSimplex: return "DegenerateSimplex";
        case ErrorCode::NotClosed: return "NotClosed";
        case ErrorCode::NotConnected: return "NotConnected";
        case ErrorCode::NotOrientable: return "NotOrientable";
        case ErrorCode::DegreeOutOfRange: return "DegreeOutOfRange";
        case ErrorCode::DegreeMismatch: return "DegreeMismatch";
        case ErrorCode::RingMismatch: return "RingMismatch";
        case ErrorCode::NotACocycle: return "NotACocycle";
        case ErrorCode::NotACycle: return "NotACycle";
        case ErrorCode::NotASurface: return "NotASurface";
        case ErrorCode::NotAThreeManifold: return "NotAThreeManifold";
        case ErrorCode::NotRegularValue: return "NotRegularValue";
        case ErrorCode::FaceMatchingFailure: return "FaceMatchingFailure";
        case ErrorCode::UnknownName: return "UnknownName";
        case ErrorCode::FileMissing: return "FileMissing";
        case ErrorCode::ChecksumMismatch: return "ChecksumMismatch";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::UsageError: return "UsageError";
        case ErrorCode::InternalError: return "InternalError";
    }
    return "UnknownError";
}

Index SimplicialComplex::index_of(int k, const Simplex& s) const {
    if (k < 0 || k > dim) return -1;
    const auto& list = simplices[static_cast<size_t>(k)];
    auto it = std::lower_bound(list.begin(), list.end(), s);
    if (it == list.end() || *it != s) return -1;
    return static_cast<Index>(it - list.begin());
}

std::vector<Index> SimplicialComplex::f_vector() const {
    std::vector<Index> f;
    for (int k = 0; k <= dim; ++k) f.push_back(count(k));
    return f;
}

long SimplicialComplex::euler_characteristic() const {
    long chi = 0;
    for (int k = 0; k <= dim; ++k) chi += (k % 2 == 0 ? 1 : -1) * static_cast<long>(count(k));
    return chi;
}

std::vector<std::pair<Index, int>> SimplicialComplex::facets_with_signs(int k, Index i) const {
    std::vector<std::pair<Index, int>> out;
    if (k <= 0) return out;
    const Simplex& s = simplex(k, i);
    Simplex face(s.size() - 1);
    for (size_t j = 0; j < s.size(); ++j) {
        face.clear();
        for (size_t l = 0; l < s.size(); ++l)
            if (l != j) face.push_back(s[l]);
        Index fi = index_of(k - 1, face);
        require(fi >= 0, ErrorCode::InternalError, "missing face in closed complex");
        out.emplace_back(fi, (j % 2 == 0) ? 1 : -1);
    }
    return out;
}

SimplicialComplex build_complex(const std::vector<std::vector<long>>& top_simplices) {
    require(!top_simplices.empty(), ErrorCode::ParseError, "no top simplices given");
    const size_t arity = top_simplices.front().size();
    require(arity >= 1, ErrorCode::ParseError, "empty simplex tuple");
    for (const auto& t : top_simplices)
        require(t.size() == arity, ErrorCode::MixedDimension,
                "top simplices must all have the same number of vertices");

    // dense re-indexing of (possibly sparse) vertex labels, order-preserving
    std::set<long> labels;
    for (const auto& t : top_simplices) labels.insert(t.begin(), t.end());
    std::map<long, int> dense;
    std::vector<long> vertex_labels(labels.begin(), labels.end());
    for (size_t i = 0; i < vertex_labels.size(); ++i) dense[vertex_labels[i]] = static_cast<int>(i);

    const int n = static_cast<int>(arity) - 1;
    std::vector<std::set<Simplex>> per_dim(static_cast<size_t>(n) + 1);
    for (const auto& t : top_simplices) {
        Simplex s;
        for (long v : t) s.push_back(dense.at(v));
        std::sort(s.begin(), s.end());
        require(std::adjacent_find(s.begin(), s.end()) == s.end(), ErrorCode::DegenerateSimplex,
                "repeated vertex in simplex");
        per_dim[static_cast<size_t>(n)].insert(std::move(s));
    }
    // face closure, top down
    for (int k = n; k > 0; --k) {
        for (const Simplex& s : per_dim[static_cast<size_t>(k)]) {
            Simplex face(s.size() - 1);
            for (size_t j = 0; j < s.size(); ++j) {
                face.clear();
                for (size_t l = 0; l < s.size(); ++l)
                    if (l != j) face.push_back(s[l]);
                per_dim[static_cast<size_t>(k) - 1].insert(face);
            }
        }
    }

    SimplicialComplex out;
    out.dim = n;
    out.vertex_count = static_cast<int>(vertex_labels.size());
    out.vertex_labels = std::move(vertex_labels);
    out.simplices.resize(static_cast<size_t>(n) + 1);
    for (int k = 0; k <= n; ++k)
        out.simplices[static_cast<size_t>(k)].assign(per_dim[static_cast<size_t>(k)].begin(),
                                                     per_dim[static_cast<size_t>(k)].end());
    return out;
}

SimplicialComplex build_complex_int(const std::vector<Simplex>& top_simplices) {
    std::vector<std::vector<long>> wide;
    wide.reserve(top_simplices.size());
    for (const auto& s : top_simplices) wide.emplace_back(s.begin(), s.end());
    return build_complex(wide);
}

ManifoldCertificate validate_closed_manifold(const SimplicialComplex& k) {
    ManifoldCertificate cert;
    const int n = k.dim;
    const Index tops = k.count(n);

    // closed: every (n-1)-simplex has exactly two top cofaces
    std::vector<std::vector<std::pair<Index, int>>> cofaces(
        static_cast<size_t>(k.count(n - 1)));  // face -> list of (top index, dropped position)
    bool closed = true;
    if (n == 0) {
        closed = true;  // points: vacuously closed
    } else {
        for (Index i = 0; i < tops; ++i) {
            auto facets = k.facets_with_signs(n, i);
            for (size_t j = 0; j < facets.size(); ++j)
                cofaces[static_cast<size_t>(facets[j].first)].emplace_back(i, static_cast<int>(j));
        }
        for (Index f = 0; f < k.count(n - 1); ++f) {
            size_t c = cofaces[static_cast<size_t>(f)].size();
            if (c != 2) {
                closed = false;
                cert.failures.push_back(
                    {n - 1, f, "has " + std::to_string(c) + " top cofaces, expected 2"});
            }
        }
    }
    cert.is_closed_pseudomanifold = closed;

    // connectivity of the 1-skeleton
    std::vector<std::vector<int>> adj(static_cast<size_t>(k.vertex_count));
    if (n >= 1)
        for (const Simplex& e : k.simplices[1]) {
            adj[static_cast<size_t>(e[0])].push_back(e[1]);
            adj[static_cast<size_t>(e[1])].push_back(e[0]);
        }
    std::vector<bool> seen(static_cast<size_t>(k.vertex_count), false);
    if (k.vertex_count > 0) {
        std::vector<int> stack = {0};
        seen[0] = true;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj[static_cast<size_t>(v)])
                if (!seen[static_cast<size_t>(w)]) {
                    seen[static_cast<size_t>(w)] = true;
                    stack.push_back(w);
                }
        }
    }
    cert.is_connected = std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });

    // orientation propagation across the dual graph
    if (!closed) {
        cert.orientable = false;
        return cert;
    }
    if (n == 0) {
        cert.orientable = true;
        cert.orientation.assign(static_cast<size_t>(tops), 1);
        return cert;
    }
    std::vector<int> sign(static_cast<size_t>(tops), 0);
    bool orientable = true;
    for (Index root = 0; root < tops && orientable; ++root) {
        if (sign[static_cast<size_t>(root)] != 0) continue;
        sign[static_cast<size_t>(root)] = 1;  // lexicographically first simplex of the component
        std::vector<Index> stack = {root};
        while (!stack.empty() && orientable) {
            Index i = stack.back();
            stack.pop_back();
            auto facets = k.facets_with_signs(n, i);
            for (size_t j = 0; j < facets.size(); ++j) {
                for (const auto& [i2, j2] : cofaces[static_cast<size_t>(facets[j].first)]) {
                    if (i2 == i) continue;
                    // coherence: induced signs on the shared face must be opposite
                    int induced_i = sign[static_cast<size_t>(i)] * ((j % 2 == 0) ? 1 : -1);
                    int want = -induced_i * ((j2 % 2 == 0) ? 1 : -1);
                    int& s2 = sign[static_cast<size_t>(i2)];
                    if (s2 == 0) {
                        s2 = want;
                        stack.push_back(i2);
                    } else if (s2 != want) {
                        orientable = false;
                        cert.failures.push_back({n, i2, "orientation propagation contradiction"});
                        break;
                    }
                }
                if (!orientable) break;
            }
        }
    }
    cert.orientable = orientable;
    if (orientable) cert.orientation = std::move(sign);
    return cert;
}

namespace {

/// Sparse boundary application on a top-degree chain, used to certify the
/// fundamental class without pulling in the chain-algebra module.
VecZ apply_top_boundary(const SimplicialComplex& k, const VecZ& chain) {
    const int n = k.dim;
    VecZ out = VecZ::Zero(k.count(n - 1));
    for (Index i = 0; i < k.count(n); ++i) {
        if (chain(i) == 0) continue;
        for (const auto& [f, s] : k.facets_with_signs(n, i)) out(f) += s * chain(i);
    }
    return out;
}

}  // namespace

FundamentalClass fundamental_class(const SimplicialComplex& k, const ManifoldCertificate& cert,
                                   Ring ring) {
    require(cert.is_closed_pseudomanifold, ErrorCode::NotClosed,
            "fundamental class requires a closed pseudomanifold");
    require(cert.is_connected, ErrorCode::NotConnected, "fundamental class requires connectivity");
    FundamentalClass fc;
    fc.ring = ring;
    const Index tops = k.count(k.dim);
    fc.chain = VecZ::Zero(tops);
    if (ring == Ring::Integers) {
        require(cert.orientable, ErrorCode::NotOrientable,
                "integral fundamental class requires an orientable manifold");
        for (Index i = 0; i < tops; ++i) fc.chain(i) = cert.orientation[static_cast<size_t>(i)];
    } else {
        fc.chain.setOnes();
    }
    if (k.dim > 0) {
        VecZ b = apply_top_boundary(k, fc.chain);
        if (ring == Ring::Mod2)
            for (Index i = 0; i < b.size(); ++i) b(i) = Int(mpz_odd_p(b(i).get_mpz_t()) ? 1 : 0);
        require(b.isZero(0), ErrorCode::InternalError, "fundamental class is not a cycle");
    }
    return fc;
}

Subdivision barycentric_subdivision(const SimplicialComplex& k) {
    Subdivision sd;
    const int n = k.dim;

    // Sd-vertex per simplex, ordered by (dimension, lex index)
    std::vector<Index> offset(static_cast<size_t>(n) + 1, 0);
    for (int d = 1; d <= n; ++d)
        offset[static_cast<size_t>(d)] = offset[static_cast<size_t>(d) - 1] + k.count(d - 1);
    sd.vertex_of.resize(static_cast<size_t>(n) + 1);
    for (int d = 0; d <= n; ++d) {
        sd.vertex_of[static_cast<size_t>(d)].resize(static_cast<size_t>(k.count(d)));
        for (Index i = 0; i < k.count(d); ++i) {
            Index v = offset[static_cast<size_t>(d)] + i;
            sd.vertex_of[static_cast<size_t>(d)][static_cast<size_t>(i)] = v;
            sd.vertex_origin.emplace_back(d, i);
        }
    }

    // maximal flags: one per (top simplex, permutation of its vertices)
    std::vector<std::vector<long>> tops;
    for (Index i = 0; i < k.count(n); ++i) {
        const Simplex& s = k.simplex(n, i);
        std::vector<int> perm(s.size());
        std::iota(perm.begin(), perm.end(), 0);
        do {
            std::vector<long> flag;
            Simplex prefix;
            for (size_t j = 0; j < s.size(); ++j) {
                prefix.push_back(s[static_cast<size_t>(perm[j])]);
                Simplex sorted = prefix;
                std::sort(sorted.begin(), sorted.end());
                Index idx = k.index_of(static_cast<int>(j), sorted);
                require(idx >= 0, ErrorCode::InternalError, "flag prefix missing");
                flag.push_back(offset[j] + idx);
            }
            tops.push_back(std::move(flag));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    sd.complex = build_complex(tops);
    require(sd.complex.vertex_count == static_cast<int>(sd.vertex_origin.size()),
            ErrorCode::InternalError, "subdivision vertex count mismatch");
    return sd;
}

}  // namespace capdual
