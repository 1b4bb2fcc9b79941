#include <catch2/catch_amalgamated.hpp>

#include "capdual/duality.hpp"
#include "capdual/zoo.hpp"
#include "test_helpers.hpp"

using namespace capdual;

namespace {

VecZ zero_or(const VecZ& v, Index n) { return v.size() == n ? v : VecZ::Zero(n); }

/// Exact Leibniz check for one random pair at chain degree d, cochain degree kk.
void check_leibniz(const SimplicialComplex& k, int d, int kk, Ring ring) {
    int lo = ring == Ring::Mod2 ? 0 : -3;
    int hi = 3;
    Chain c{d, ring, testutil::random_vector(k.count(d), lo, hi)};
    Cochain phi{kk, ring, testutil::random_vector(k.count(kk), lo, hi)};

    VecZ lhs = boundary_sparse(k, d - kk).apply(cap_chain(k, c, phi).values);

    const Index out_dim = k.count(d - kk - 1);
    VecZ term1 = VecZ::Zero(out_dim);
    if (kk <= d - 1) {
        Chain bc{d - 1, ring, boundary_sparse(k, d).apply(c.values)};
        term1 = cap_chain(k, bc, phi).values;
    }
    VecZ term2 = VecZ::Zero(out_dim);
    if (kk + 1 <= d) {
        Cochain dphi{kk + 1, ring, boundary_sparse(k, kk + 1).transpose().apply(phi.values)};
        term2 = cap_chain(k, c, dphi).values;
    }
    int sign = kk % 2 == 0 ? 1 : -1;
    VecZ rhs = sign * (zero_or(term1, out_dim) - zero_or(term2, out_dim));
    VecZ diff = lhs - rhs;
    if (ring == Ring::Mod2)
        for (Index i = 0; i < diff.size(); ++i)
            diff(i) = Int(mpz_odd_p(diff(i).get_mpz_t()) ? 1 : 0);
    REQUIRE(diff.isZero(0));
}

}  // namespace

TEST_CASE("cap with the unit 0-cocycle is the identity") {
    auto k = get_complex("torus7", CAPDUAL_DATA_DIR);
    Chain c{2, Ring::Integers, testutil::random_vector(k.count(2), -4, 4)};
    Cochain ones{0, Ring::Integers, VecZ::Ones(k.count(0))};
    auto capped = cap_chain(k, c, ones);
    REQUIRE(capped.degree == 2);
    REQUIRE(capped.values == c.values);
}

TEST_CASE("cap in top degree evaluates and leaves the last vertex") {
    auto k = build_complex({{0, 1, 2}});
    Chain c{2, Ring::Integers, VecZ::Ones(1)};
    Cochain phi{2, Ring::Integers, VecZ::Zero(1)};
    phi.values(0) = 5;
    auto capped = cap_chain(k, c, phi);
    REQUIRE(capped.degree == 0);
    // the surviving vertex is the last vertex of (0,1,2)
    REQUIRE(capped.values(k.index_of(0, {2})) == 5);
    REQUIRE(capped.values.sum() == 5);
}

TEST_CASE("cap degree and ring mismatches are rejected") {
    auto k = get_complex("sphere2", CAPDUAL_DATA_DIR);
    Chain c{1, Ring::Integers, VecZ::Zero(k.count(1))};
    Cochain phi{2, Ring::Integers, VecZ::Zero(k.count(2))};
    REQUIRE_THROWS_MATCHES(cap_chain(k, c, phi), Error,
                           Catch::Matchers::Predicate<Error>([](const Error& e) {
                               return e.code() == ErrorCode::DegreeMismatch;
                           }));
    Cochain phi2{1, Ring::Mod2, VecZ::Zero(k.count(1))};
    REQUIRE_THROWS_MATCHES(cap_chain(k, c, phi2), Error,
                           Catch::Matchers::Predicate<Error>([](const Error& e) {
                               return e.code() == ErrorCode::RingMismatch;
                           }));
}

TEST_CASE("Leibniz identity for the cap product, randomized") {
    for (const char* name : {"sphere2", "sphere3", "torus7", "projective_plane6"}) {
        auto k = get_complex(name, CAPDUAL_DATA_DIR);
        for (int d = 0; d <= k.dim; ++d)
            for (int kk = 0; kk <= d; ++kk)
                for (int trial = 0; trial < 25; ++trial) {
                    INFO(name << " d=" << d << " k=" << kk);
                    check_leibniz(k, d, kk, Ring::Integers);
                    check_leibniz(k, d, kk, Ring::Mod2);
                }
    }
}

TEST_CASE("duality on the 3-sphere: every degree is an isomorphism") {
    auto k = get_complex("sphere3", CAPDUAL_DATA_DIR);
    auto cert = validate_closed_manifold(k);
    for (int d = 0; d <= 3; ++d) {
        auto dm = duality_map(k, cert, Ring::Integers, d);
        INFO("degree " << d);
        REQUIRE(dm.iso);
    }
}

TEST_CASE("duality on the torus in degree 1: unimodular 2x2 induced matrix") {
    auto k = get_complex("torus7", CAPDUAL_DATA_DIR);
    auto cert = validate_closed_manifold(k);
    auto dm = duality_map(k, cert, Ring::Integers, 1);
    REQUIRE(dm.source.betti == 2);
    REQUIRE(dm.target.betti == 2);
    REQUIRE(dm.induced.matrix.rows() == 2);
    REQUIRE(dm.induced.matrix.cols() == 2);
    Int det = bareiss_determinant(dm.induced.matrix);
    REQUIRE((det == 1 || det == -1));
    REQUIRE(dm.iso);
}

TEST_CASE("projective plane: mod-2 duality passes, integral duality is refused") {
    auto k = get_complex("projective_plane6", CAPDUAL_DATA_DIR);
    auto cert = validate_closed_manifold(k);
    for (int d = 0; d <= 2; ++d) REQUIRE(duality_map(k, cert, Ring::Mod2, d).iso);
    REQUIRE_THROWS_MATCHES(duality_map(k, cert, Ring::Integers, 1), Error,
                           Catch::Matchers::Predicate<Error>([](const Error& e) {
                               return e.code() == ErrorCode::NotOrientable;
                           }));
}

TEST_CASE("verify_duality passes on the in-memory zoo") {
    for (const char* name : {"sphere2", "sphere3", "torus7"}) {
        auto k = get_complex(name, CAPDUAL_DATA_DIR);
        auto cert = validate_closed_manifold(k);
        REQUIRE(verify_duality(k, cert, Ring::Integers).pass);
    }
    for (const char* name :
         {"sphere2", "sphere3", "torus7", "projective_plane6", "klein_bottle8"}) {
        auto k = get_complex(name, CAPDUAL_DATA_DIR);
        auto cert = validate_closed_manifold(k);
        REQUIRE(verify_duality(k, cert, Ring::Mod2).pass);
    }
}

TEST_CASE("degenerate degrees are vacuously isomorphisms") {
    auto k = get_complex("sphere2", CAPDUAL_DATA_DIR);
    auto cert = validate_closed_manifold(k);
    REQUIRE(duality_map(k, cert, Ring::Integers, -1).iso);
    REQUIRE(duality_map(k, cert, Ring::Integers, 5).iso);
}

TEST_CASE("non-closed input is rejected with NotClosed") {
    std::vector<std::vector<long>> tops;
    for (long i = 0; i < 7; ++i) {
        tops.push_back({i, (i + 1) % 7, (i + 3) % 7});
        if (i > 0) tops.push_back({i, (i + 2) % 7, (i + 3) % 7});
    }
    auto k = build_complex(tops);  // torus with one triangle deleted
    auto cert = validate_closed_manifold(k);
    REQUIRE_THROWS_MATCHES(verify_duality(k, cert, Ring::Integers), Error,
                           Catch::Matchers::Predicate<Error>([](const Error& e) {
                               return e.code() == ErrorCode::NotClosed;
                           }));
}

TEST_CASE("duality genuinely fails on a non-manifold pseudomanifold") {
    // suspension of the torus: closed orientable pseudomanifold, H^1 = 0 but
    // H_2 = Z^2, so the middle degrees cannot be isomorphic
    std::vector<std::vector<long>> tops;
    for (long i = 0; i < 7; ++i)
        for (long pole : {7L, 8L}) {
            tops.push_back({i, (i + 1) % 7, (i + 3) % 7, pole});
            tops.push_back({i, (i + 2) % 7, (i + 3) % 7, pole});
        }
    auto k = build_complex(tops);
    auto cert = validate_closed_manifold(k);
    REQUIRE(cert.is_closed_pseudomanifold);
    REQUIRE(cert.orientable);
    auto report = verify_duality(k, cert, Ring::Integers);
    REQUIRE_FALSE(report.pass);
    REQUIRE_FALSE(report.rows[1].iso);
    REQUIRE_FALSE(report.rows[2].iso);
    REQUIRE(report.rows[0].iso);
    REQUIRE(report.rows[3].iso);
}

TEST_CASE("two routes agree degree by degree") {
    for (const char* name :
         {"sphere2", "sphere3", "torus7", "projective_plane6", "klein_bottle8"}) {
        auto k = get_complex(name, CAPDUAL_DATA_DIR);
        auto cert = validate_closed_manifold(k);
        std::vector<Ring> rings = {Ring::Mod2};
        if (cert.orientable) rings.push_back(Ring::Integers);
        for (Ring ring : rings) {
            auto cap_route = verify_duality(k, cert, ring);
            auto dual_route = verify_duality_dual_route(k, cert, ring);
            REQUIRE(cap_route.rows.size() == dual_route.rows.size());
            for (size_t i = 0; i < cap_route.rows.size(); ++i) {
                INFO(name << " ring " << ring_name(ring) << " degree " << i);
                REQUIRE(cap_route.rows[i].iso == dual_route.rows[i].iso);
            }
            REQUIRE(cap_route.pass == dual_route.pass);
        }
    }
}

TEST_CASE("duality verdicts are stable under barycentric subdivision") {
    for (const char* name : {"sphere2", "torus7", "projective_plane6"}) {
        auto k = get_complex(name, CAPDUAL_DATA_DIR);
        auto cert = validate_closed_manifold(k);
        auto sd = barycentric_subdivision(k);
        auto cert_sd = validate_closed_manifold(sd.complex);
        REQUIRE(cert.orientable == cert_sd.orientable);
        std::vector<Ring> rings = {Ring::Mod2};
        if (cert.orientable) rings.push_back(Ring::Integers);
        for (Ring ring : rings) {
            auto before = verify_duality(k, cert, ring);
            auto after = verify_duality(sd.complex, cert_sd, ring);
            for (size_t i = 0; i < before.rows.size(); ++i)
                REQUIRE(before.rows[i].iso == after.rows[i].iso);
        }
    }
}
