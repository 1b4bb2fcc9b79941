#include <catch2/catch_amalgamated.hpp>

#include "capdual/chain_algebra.hpp"
#include "capdual/zoo.hpp"
#include "test_helpers.hpp"

using namespace capdual;

namespace {

std::vector<std::string> local_zoo() {
    return {"sphere2", "sphere3", "torus7", "projective_plane6", "klein_bottle8"};
}

void check_chain_axioms(const SimplicialComplex& k) {
    for (int d = 1; d < k.dim; ++d) {
        SparseIntMatrix lo = boundary_sparse(k, d);
        SparseIntMatrix hi = boundary_sparse(k, d + 1);
        REQUIRE(composes_to_zero(lo, hi));
        REQUIRE(composes_to_zero(hi.transpose(), lo.transpose()));
    }
}

/// Independent homology oracle: betti from rational ranks, torsion from the
/// invariant factors of the raw boundary matrix one degree up.
std::pair<std::vector<Index>, std::vector<std::vector<Int>>> homology_oracle_z(
    const SimplicialComplex& k) {
    std::vector<Index> ranks(static_cast<size_t>(k.dim) + 2, 0);
    for (int d = 1; d <= k.dim; ++d)
        ranks[static_cast<size_t>(d)] = testutil::rank_oracle_q(boundary_sparse(k, d).dense());
    std::vector<Index> betti;
    std::vector<std::vector<Int>> torsion;
    for (int d = 0; d <= k.dim; ++d) {
        betti.push_back(k.count(d) - ranks[static_cast<size_t>(d)] -
                        ranks[static_cast<size_t>(d) + 1]);
        std::vector<Int> tor;
        if (d < k.dim) {
            SnfOptions none;
            none.want_u = none.want_v = false;
            auto cert = smith_normal_form(boundary_sparse(k, d + 1).dense(), none);
            for (const Int& f : cert.invariant_factors)
                if (f > 1) tor.push_back(f);
        }
        torsion.push_back(tor);
    }
    return {betti, torsion};
}

std::vector<Index> betti_oracle_mod2(const SimplicialComplex& k) {
    std::vector<Index> ranks(static_cast<size_t>(k.dim) + 2, 0);
    for (int d = 1; d <= k.dim; ++d)
        ranks[static_cast<size_t>(d)] = testutil::rank_oracle_mod2(boundary_sparse(k, d).dense());
    std::vector<Index> betti;
    for (int d = 0; d <= k.dim; ++d)
        betti.push_back(k.count(d) - ranks[static_cast<size_t>(d)] -
                        ranks[static_cast<size_t>(d) + 1]);
    return betti;
}

}  // namespace

TEST_CASE("boundary of a single edge") {
    auto k = build_complex({{0, 1}});
    MatZ d1 = boundary_matrix(k, 1, Ring::Integers);
    REQUIRE(d1.rows() == 2);
    REQUIRE(d1.cols() == 1);
    REQUIRE(d1(0, 0) == -1);
    REQUIRE(d1(1, 0) == 1);
    MatZ m2 = boundary_matrix(k, 1, Ring::Mod2);
    REQUIRE(m2(0, 0) == 1);
    REQUIRE(m2(1, 0) == 1);
    REQUIRE_THROWS_MATCHES(boundary_matrix(k, 2, Ring::Integers), Error,
                           Catch::Matchers::Predicate<Error>([](const Error& e) {
                               return e.code() == ErrorCode::DegreeOutOfRange;
                           }));
}

TEST_CASE("chain axioms on the in-memory zoo") {
    for (const auto& name : local_zoo()) check_chain_axioms(get_complex(name, CAPDUAL_DATA_DIR));
}

TEST_CASE("sphere2: rank of the edge boundary is 3") {
    auto k = get_complex("sphere2", CAPDUAL_DATA_DIR);
    REQUIRE(testutil::rank_oracle_q(boundary_matrix(k, 1, Ring::Integers)) == 3);
}

TEST_CASE("homology golden values, cross-checked against the oracle") {
    struct Golden {
        const char* name;
        std::vector<Index> betti;
        std::vector<std::vector<Int>> torsion;
    };
    std::vector<Golden> goldens = {
        {"sphere2", {1, 0, 1}, {{}, {}, {}}},
        {"sphere3", {1, 0, 0, 1}, {{}, {}, {}, {}}},
        {"torus7", {1, 2, 1}, {{}, {}, {}}},
        {"projective_plane6", {1, 0, 0}, {{}, {2}, {}}},
        {"klein_bottle8", {1, 1, 0}, {{}, {2}, {}}},
    };
    for (const auto& g : goldens) {
        auto k = get_complex(g.name, CAPDUAL_DATA_DIR);
        auto [oracle_betti, oracle_torsion] = homology_oracle_z(k);
        REQUIRE(oracle_betti == g.betti);
        REQUIRE(oracle_torsion == g.torsion);
        for (int d = 0; d <= k.dim; ++d) {
            auto h = homology(k, d, Ring::Integers);
            INFO(g.name << " degree " << d);
            REQUIRE(h.betti == g.betti[static_cast<size_t>(d)]);
            REQUIRE(h.torsion == g.torsion[static_cast<size_t>(d)]);
        }
    }
}

TEST_CASE("mod-2 betti numbers match the independent oracle") {
    for (const auto& name : local_zoo()) {
        auto k = get_complex(name, CAPDUAL_DATA_DIR);
        auto oracle = betti_oracle_mod2(k);
        for (int d = 0; d <= k.dim; ++d) {
            auto h = homology(k, d, Ring::Mod2);
            INFO(name << " degree " << d);
            REQUIRE(h.betti == oracle[static_cast<size_t>(d)]);
            REQUIRE(h.torsion.empty());
        }
    }
}

TEST_CASE("homology generators are nontrivial cycles") {
    for (const auto& name : local_zoo()) {
        auto k = get_complex(name, CAPDUAL_DATA_DIR);
        for (Ring ring : {Ring::Integers, Ring::Mod2}) {
            for (int d = 0; d <= k.dim; ++d) {
                auto h = homology(k, d, ring);
                for (Index j = 0; j < h.generator_count(); ++j) {
                    VecZ gen = h.generators.col(j);
                    REQUIRE(h.is_cycle_vector(gen));
                    auto coords = h.class_coordinates(gen);
                    REQUIRE_FALSE(coords.is_zero());
                }
            }
        }
    }
}

TEST_CASE("class coordinates kill boundaries") {
    auto k = get_complex("torus7", CAPDUAL_DATA_DIR);
    auto h = homology(k, 1, Ring::Integers);
    SparseIntMatrix d2 = boundary_sparse(k, 2);
    for (int trial = 0; trial < 20; ++trial) {
        VecZ w = testutil::random_vector(k.count(2), -3, 3);
        VecZ boundary = d2.apply(w);
        auto coords = h.class_coordinates(boundary);
        REQUIRE(coords.is_zero());
    }
    // and reject non-cycles
    VecZ notcycle = VecZ::Zero(k.count(1));
    notcycle(0) = 1;
    REQUIRE_THROWS_MATCHES(h.class_coordinates(notcycle), Error,
                           Catch::Matchers::Predicate<Error>([](const Error& e) {
                               return e.code() == ErrorCode::NotACycle;
                           }));
}

TEST_CASE("cohomology: torus has two independent 1-cocycle classes") {
    auto k = get_complex("torus7", CAPDUAL_DATA_DIR);
    auto h = cohomology(k, 1, Ring::Integers);
    REQUIRE(h.betti == 2);
    REQUIRE(h.torsion.empty());
    for (Index j = 0; j < h.generator_count(); ++j) {
        Cochain phi{1, Ring::Integers, h.generators.col(j)};
        REQUIRE(is_cocycle(k, phi));
    }
}

TEST_CASE("cohomology: torsion moves up one degree on the projective plane") {
    auto k = get_complex("projective_plane6", CAPDUAL_DATA_DIR);
    auto h2 = cohomology(k, 2, Ring::Integers);
    REQUIRE(h2.betti == 0);
    REQUIRE(h2.torsion == std::vector<Int>{2});
    auto h1 = cohomology(k, 1, Ring::Integers);
    REQUIRE(h1.betti == 0);
    REQUIRE(h1.torsion.empty());
}

TEST_CASE("cohomology in degree zero counts components") {
    for (const auto& name : local_zoo()) {
        auto k = get_complex(name, CAPDUAL_DATA_DIR);
        REQUIRE(cohomology(k, 0, Ring::Integers).betti == 1);
    }
}

TEST_CASE("universal coefficients spot check on the zoo") {
    for (const auto& name : local_zoo()) {
        auto k = get_complex(name, CAPDUAL_DATA_DIR);
        for (int d = 1; d <= k.dim; ++d) {
            auto hk = cohomology(k, d, Ring::Integers);
            auto hm = homology(k, d - 1, Ring::Integers);
            INFO(name << " degree " << d);
            REQUIRE(hk.torsion == hm.torsion);
        }
    }
}

TEST_CASE("Euler characteristic two ways") {
    for (const auto& name : local_zoo()) {
        auto k = get_complex(name, CAPDUAL_DATA_DIR);
        long from_betti = 0;
        for (int d = 0; d <= k.dim; ++d) {
            auto h = homology(k, d, Ring::Integers);
            from_betti += (d % 2 == 0 ? 1 : -1) * static_cast<long>(h.betti);
        }
        REQUIRE(from_betti == k.euler_characteristic());
    }
}

TEST_CASE("mod-2 betti dominates rational betti") {
    for (const auto& name : local_zoo()) {
        auto k = get_complex(name, CAPDUAL_DATA_DIR);
        for (int d = 0; d <= k.dim; ++d) {
            auto hz = homology(k, d, Ring::Integers);
            auto h2 = homology(k, d, Ring::Mod2);
            INFO(name << " degree " << d);
            REQUIRE(h2.betti >= hz.betti);
            // equality exactly when no factor-2 torsion is adjacent
            auto two_torsion = [](const HomologyGroup& h) {
                for (const Int& t : h.torsion)
                    if (t % 2 == 0) return true;
                return false;
            };
            auto below = homology(k, d - 1, Ring::Integers);
            bool adjacent = two_torsion(hz) || two_torsion(below);
            REQUIRE((h2.betti == hz.betti) == !adjacent);
        }
    }
}

TEST_CASE("evaluate: pairing basics") {
    auto k = get_complex("torus7", CAPDUAL_DATA_DIR);
    const Index edges = k.count(1);

    Cochain zero{1, Ring::Integers, VecZ::Zero(edges)};
    Chain any{1, Ring::Integers, testutil::random_vector(edges, -5, 5)};
    REQUIRE(evaluate(zero, any) == 0);

    // indicator against the matching unit chain
    Cochain ind{1, Ring::Integers, VecZ::Zero(edges)};
    ind.values(3) = 1;
    Chain unit{1, Ring::Integers, VecZ::Zero(edges)};
    unit.values(3) = 1;
    REQUIRE(evaluate(ind, unit) == 1);

    REQUIRE_THROWS_MATCHES(
        evaluate(Cochain{1, Ring::Integers, VecZ::Zero(edges)},
                 Chain{2, Ring::Integers, VecZ::Zero(k.count(2))}),
        Error, Catch::Matchers::Predicate<Error>(
                   [](const Error& e) { return e.code() == ErrorCode::DegreeMismatch; }));
    REQUIRE_THROWS_MATCHES(
        evaluate(Cochain{1, Ring::Integers, VecZ::Zero(edges)},
                 Chain{1, Ring::Mod2, VecZ::Zero(edges)}),
        Error, Catch::Matchers::Predicate<Error>(
                   [](const Error& e) { return e.code() == ErrorCode::RingMismatch; }));
}

TEST_CASE("evaluate: coboundaries kill cycles, exactly") {
    auto k = get_complex("torus7", CAPDUAL_DATA_DIR);
    auto h1 = homology(k, 1, Ring::Integers);
    SparseIntMatrix delta0 = boundary_sparse(k, 1).transpose();
    for (int trial = 0; trial < 50; ++trial) {
        VecZ g = testutil::random_vector(k.count(0), -4, 4);
        Cochain dg{1, Ring::Integers, delta0.apply(g)};
        // random cycle: integer combination of homology generators plus a boundary
        VecZ cycle = VecZ::Zero(k.count(1));
        for (Index j = 0; j < h1.generator_count(); ++j)
            cycle += testutil::random_vector(1, -3, 3)(0) * h1.generators.col(j);
        cycle += boundary_sparse(k, 2).apply(testutil::random_vector(k.count(2), -3, 3));
        REQUIRE(evaluate(dg, Chain{1, Ring::Integers, cycle}) == 0);
    }
}
