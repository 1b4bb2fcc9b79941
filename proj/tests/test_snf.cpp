#include <catch2/catch_amalgamated.hpp>

#include "capdual/snf.hpp"
#include "test_helpers.hpp"

using namespace capdual;

namespace {

SnfOptions full_options() {
    SnfOptions o;
    o.want_u = o.want_v = o.want_u_inv = o.want_v_inv = true;
    return o;
}

/// The whole certificate: U M V = D, unimodular transforms, divisibility.
void check_certificate(const MatZ& m, const SnfCertificate& cert) {
    REQUIRE(cert.rows == m.rows());
    REQUIRE(cert.cols == m.cols());
    MatZ d = cert.diagonal_matrix();
    REQUIRE(cert.u * m * cert.v == d);
    Int du = bareiss_determinant(cert.u);
    Int dv = bareiss_determinant(cert.v);
    REQUIRE((du == 1 || du == -1));
    REQUIRE((dv == 1 || dv == -1));
    REQUIRE(cert.u * cert.u_inv == MatZ::Identity(m.rows(), m.rows()));
    REQUIRE(cert.v * cert.v_inv == MatZ::Identity(m.cols(), m.cols()));
    for (size_t i = 0; i + 1 < cert.invariant_factors.size(); ++i) {
        REQUIRE(cert.invariant_factors[i] > 0);
        REQUIRE(cert.invariant_factors[i + 1] % cert.invariant_factors[i] == 0);
    }
    REQUIRE(static_cast<Index>(cert.invariant_factors.size()) == testutil::rank_oracle_q(m));
}

}  // namespace

TEST_CASE("snf of diag(2,3) has invariant factors (1,6)") {
    MatZ m = MatZ::Zero(2, 2);
    m(0, 0) = 2;
    m(1, 1) = 3;
    auto cert = smith_normal_form(m, full_options());
    REQUIRE(cert.invariant_factors == std::vector<Int>{1, 6});
    check_certificate(m, cert);
}

TEST_CASE("snf of the zero matrix") {
    MatZ m = MatZ::Zero(3, 2);
    auto cert = smith_normal_form(m, full_options());
    REQUIRE(cert.invariant_factors.empty());
    REQUIRE(cert.u == MatZ::Identity(3, 3));
    REQUIRE(cert.v == MatZ::Identity(2, 2));
}

TEST_CASE("snf of the identity") {
    MatZ m = MatZ::Identity(4, 4);
    auto cert = smith_normal_form(m, full_options());
    REQUIRE(cert.invariant_factors == std::vector<Int>{1, 1, 1, 1});
    check_certificate(m, cert);
}

TEST_CASE("snf handles empty shapes") {
    auto cert = smith_normal_form(MatZ(0, 5), full_options());
    REQUIRE(cert.invariant_factors.empty());
    REQUIRE(cert.v == MatZ::Identity(5, 5));
    auto cert2 = smith_normal_form(MatZ(4, 0), full_options());
    REQUIRE(cert2.u == MatZ::Identity(4, 4));
}

TEST_CASE("snf certificate property on random matrices") {
    for (int trial = 0; trial < 60; ++trial) {
        Index rows = 1 + trial % 6;
        Index cols = 1 + (trial * 7 + 3) % 6;
        MatZ m = testutil::random_matrix(rows, cols, -9, 9);
        auto cert = smith_normal_form(m, full_options());
        check_certificate(m, cert);
    }
}

TEST_CASE("snf certificate on larger sparse-ish matrices") {
    for (int trial = 0; trial < 6; ++trial) {
        MatZ m = testutil::random_matrix(12, 15, -1, 1);
        auto cert = smith_normal_form(m, full_options());
        check_certificate(m, cert);
    }
}

TEST_CASE("snf copes with entries that force wide intermediates") {
    // Large entries push the engine off the 64-bit fast path.
    MatZ m(2, 2);
    m(0, 0) = Int("123456789012345678901234567890");
    m(0, 1) = Int("987654321098765432109876543210");
    m(1, 0) = 37;
    m(1, 1) = Int("-55555555555555555555");
    auto cert = smith_normal_form(m, full_options());
    check_certificate(m, cert);
}

TEST_CASE("bareiss determinant agrees with small closed forms") {
    MatZ m(2, 2);
    m << 3, 7, 2, 5;
    REQUIRE(bareiss_determinant(m) == 1);
    MatZ s(3, 3);
    s << 2, 0, 0, 0, 0, 1, 0, 1, 0;
    REQUIRE(bareiss_determinant(s) == -2);
    REQUIRE(bareiss_determinant(MatZ::Zero(2, 2)) == 0);
}
