#include <catch2/catch_amalgamated.hpp>

#include "capdual/dual_cellulation.hpp"
#include "capdual/duality.hpp"
#include "capdual/zoo.hpp"
#include "test_helpers.hpp"

using namespace capdual;

TEST_CASE("dual of the circle: three dual vertices, three dual edges") {
    auto k = build_complex({{0, 1}, {1, 2}, {0, 2}});
    auto cert = validate_closed_manifold(k);
    REQUIRE(cert.is_closed_pseudomanifold);
    REQUIRE(cert.orientable);
    auto dual = dual_complex(k, cert);
    REQUIRE(dual.ring == Ring::Integers);
    REQUIRE(dual.cell_count(0) == 3);
    REQUIRE(dual.cell_count(1) == 3);
    // each dual edge is made of the two half-edges around a vertex
    for (const auto& cell : dual.cells[1]) REQUIRE(cell.chain.size() == 2);
    auto corr = dual_correspondence(k, dual, Ring::Integers);
    REQUIRE(corr.epsilon.size() == 1);
}

TEST_CASE("dual of sphere2 is combinatorially the tetrahedron again") {
    auto k = get_complex("sphere2", CAPDUAL_DATA_DIR);
    auto cert = validate_closed_manifold(k);
    auto dual = dual_complex(k, cert);
    REQUIRE(dual.cell_count(0) == 4);
    REQUIRE(dual.cell_count(1) == 6);
    REQUIRE(dual.cell_count(2) == 4);
    // blocks partition the 24 top subdivision simplices
    size_t total = 0;
    for (const auto& cell : dual.cells[2]) total += cell.chain.size();
    REQUIRE(total == 24);
}

TEST_CASE("dual cell counts reverse the f-vector on the torus") {
    auto k = get_complex("torus7", CAPDUAL_DATA_DIR);
    auto cert = validate_closed_manifold(k);
    auto dual = dual_complex(k, cert);
    REQUIRE(dual.cell_count(0) == 14);
    REQUIRE(dual.cell_count(1) == 21);
    REQUIRE(dual.cell_count(2) == 7);
}

TEST_CASE("dual complex of a non-closed complex is refused") {
    auto k = build_complex({{0, 1}});
    auto cert = validate_closed_manifold(k);
    REQUIRE_THROWS_MATCHES(dual_complex(k, cert), Error,
                           Catch::Matchers::Predicate<Error>([](const Error& e) {
                               return e.code() == ErrorCode::NotClosed;
                           }));
}

TEST_CASE("chain-map identity holds with a constant sign per degree") {
    for (const char* name : {"sphere2", "sphere3", "torus7"}) {
        auto k = get_complex(name, CAPDUAL_DATA_DIR);
        auto cert = validate_closed_manifold(k);
        auto dual = dual_complex(k, cert);
        auto corr = dual_correspondence(k, dual, Ring::Integers);
        INFO(name);
        REQUIRE(corr.epsilon.size() == static_cast<size_t>(k.dim));
        for (int e : corr.epsilon) REQUIRE((e == 1 || e == -1));
        // over Mod2 the identity holds with all signs +1
        auto corr2 = dual_correspondence(k, dual, Ring::Mod2);
        for (int e : corr2.epsilon) REQUIRE(e == 1);
    }
}

TEST_CASE("mod-2 correspondence works on non-orientable manifolds") {
    for (const char* name : {"projective_plane6", "klein_bottle8"}) {
        auto k = get_complex(name, CAPDUAL_DATA_DIR);
        auto cert = validate_closed_manifold(k);
        auto dual = dual_complex(k, cert);
        REQUIRE(dual.ring == Ring::Mod2);
        auto corr = dual_correspondence(k, dual, Ring::Mod2);
        for (int e : corr.epsilon) REQUIRE(e == 1);
        REQUIRE_THROWS_MATCHES(dual_correspondence(k, dual, Ring::Integers), Error,
                               Catch::Matchers::Predicate<Error>([](const Error& e) {
                                   return e.code() == ErrorCode::NotOrientable;
                               }));
    }
}

TEST_CASE("dual homology matches simplicial homology degree-wise") {
    for (const char* name : {"sphere2", "torus7", "projective_plane6"}) {
        auto k = get_complex(name, CAPDUAL_DATA_DIR);
        auto cert = validate_closed_manifold(k);
        auto dual = dual_complex(k, cert);
        Ring ring = cert.orientable ? Ring::Integers : Ring::Mod2;
        for (int d = 0; d <= k.dim; ++d) {
            auto hd = dual_homology(dual, d, ring);
            auto hs = homology(k, d, ring);
            INFO(name << " degree " << d);
            REQUIRE(hd.betti == hs.betti);
            REQUIRE(hd.torsion == hs.torsion);
        }
    }
}

TEST_CASE("dual route: induced maps are isomorphisms (torus over Z, RP2 mod 2)") {
    {
        auto k = get_complex("torus7", CAPDUAL_DATA_DIR);
        auto cert = validate_closed_manifold(k);
        auto report = verify_duality_dual_route(k, cert, Ring::Integers);
        REQUIRE(report.pass);
        for (const auto& row : report.rows) REQUIRE(row.iso);
    }
    {
        auto k = get_complex("projective_plane6", CAPDUAL_DATA_DIR);
        auto cert = validate_closed_manifold(k);
        auto report = verify_duality_dual_route(k, cert, Ring::Mod2);
        REQUIRE(report.pass);
    }
}
