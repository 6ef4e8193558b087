#include <catch2/catch_amalgamated.hpp>

#include "elgroups/elgroups.hpp"

using namespace elgroups;

TEST_CASE("unimodularity witnesses over Z/4") {
    RingPtr R = RingSpec::modular(4);
    auto el = [&](long v) { return RingElement::from_int(R, v); };

    SECTION("(1,0) has the witness (1,0)") {
        auto w = is_unimodular({el(1), el(0)}, R);
        REQUIRE(w);
        CHECK((*w)[0] == el(1));
        CHECK((*w)[1] == el(0));
    }
    SECTION("(2,3) is unimodular since 3 is a unit") {
        auto w = is_unimodular({el(2), el(3)}, R);
        REQUIRE(w);
        RingElement sum = el(2) * (*w)[0] + el(3) * (*w)[1];
        CHECK(sum.is_one());
    }
    SECTION("(2,2) is not unimodular: all combinations are even") {
        CHECK_FALSE(is_unimodular({el(2), el(2)}, R));
    }
    SECTION("the all-zero vector is not unimodular") {
        CHECK_FALSE(is_unimodular({el(0), el(0)}, R));
    }
}

TEST_CASE("stable range condition sr_1 for small modular rings") {
    for (long m : {2L, 3L, 4L, 6L}) {
        INFO("m = " << m);
        SrResult r = check_sr(RingSpec::modular(m), 1);
        CHECK(r.holds);
    }
}

TEST_CASE("sr_1 implies sr_2 on the tested rings") {
    for (long m : {2L, 3L, 4L, 6L}) {
        INFO("m = " << m);
        CHECK(check_sr(RingSpec::modular(m), 2).holds);
    }
}

TEST_CASE("Lambda_2 enumeration matches the Lambda_n predicate") {
    FormRing F(RingSpec::modular(3), -1, LambdaStrategy::Maximal);
    auto mats = lambda_k_elements(F, 2);
    CHECK(mats.size() == 27);  // one free off-diagonal entry, two diagonal Lambda slots
    for (const auto& g : mats) CHECK(F.lambda_n_contains(g));
}

TEST_CASE("Bak-Tang Lambda-stable range at m = 1") {
    SECTION("symplectic Z/2") {
        FormRing F(RingSpec::modular(2), -1, LambdaStrategy::Maximal);
        CHECK(check_lambda_sr(F, 1).holds);
    }
    SECTION("symplectic Z/3") {
        FormRing F(RingSpec::modular(3), -1, LambdaStrategy::Maximal);
        CHECK(check_lambda_sr(F, 1).holds);
    }
}

TEST_CASE("K1 stabilization over Z/2 and Z/3") {
    SECTION("Z/2: every invertible matrix has determinant 1") {
        K1Report r = k1_stabilization_check(RingSpec::modular(2), 2);
        CHECK(r.at_n.index == 1);
        CHECK(r.at_n1.index == 1);
        CHECK(r.unit_count == 1);
        CHECK(r.ok());
    }
    SECTION("Z/3: index 2 at n = 2 and n = 3") {
        K1Report r = k1_stabilization_check(RingSpec::modular(3), 2);
        CHECK(r.at_n.index == 2);
        CHECK(r.at_n1.index == 2);
        CHECK(r.unit_count == 2);
        CHECK(r.ok());
        // sanity: the index divides the unit count for these rings
        CHECK(r.unit_count % r.at_n.index == 0);
    }
    SECTION("orders at n = 2 over Z/5: 480 / 120 = 4") {
        K1Report r = k1_stabilization_check(RingSpec::modular(5), 2, {1000});
        // n = 2 level fits in a tiny cap; n+1 level gets capped and flagged
        CHECK(r.at_n.gl_order == 480);
        CHECK(r.at_n.e_order == 120);
        CHECK(r.at_n.index == 4);
        CHECK_FALSE(r.at_n1.complete);
        CHECK_FALSE(r.ok());
    }
}

TEST_CASE("KU1 stabilization: exact enumeration at 4x4 over Z/2") {
    FormRing F(RingSpec::modular(2), -1, LambdaStrategy::Maximal);
    FiniteGroupTable eu = bfs_closure(elementary_unitary_generators(F, 2));
    REQUIRE(eu.complete());
    CHECK(eu.size() == 720);  // |Sp_4(F_2)|

    // full 2^16 matrix-space enumeration filtered by membership, via the probe;
    // the tiny cap cuts the n+1 level short, which this test does not assert
    KU1Report r = ku1_stabilization_probe(F, 2, {100000}, {});
    CHECK(r.at_n.exact);
    CHECK(r.at_n.u_order == 720);
    CHECK(r.at_n.index == 1);
}

TEST_CASE("KU1 stabilization probe: symplectic Z/2, n=2 vs n=3 indices agree", "[slow]") {
    FormRing F(RingSpec::modular(2), -1, LambdaStrategy::Maximal);
    KU1Report r = ku1_stabilization_probe(F, 2);
    CHECK(r.at_n.index == 1);
    CHECK(r.at_n1.eu_order == 1451520);  // |Sp_6(F_2)|
    CHECK(r.at_n1.index == 1);
    CHECK(r.stable);
    CHECK(r.partial);  // n = 3 level is probe-based, honestly marked
}

TEST_CASE("KU1 smoke: orthogonal Z/2 report produced without error") {
    FormRing F(RingSpec::modular(2), 1, LambdaStrategy::Minimal);
    FiniteGroupTable eu = bfs_closure(elementary_unitary_generators(F, 2));
    REQUIRE(eu.complete());
    KU1Report r = ku1_stabilization_probe(F, 2, {100000}, {});
    CHECK(r.at_n.exact);
    CHECK(r.at_n.u_order % r.at_n.eu_order == 0);
}

TEST_CASE("infinite rings are rejected by the finite-scale oracles") {
    RingPtr Z = RingSpec::integers();
    CHECK_THROWS_AS(is_unimodular({RingElement::one(Z)}, Z), Unsupported);
    CHECK_THROWS_AS(check_sr(Z, 1), Unsupported);
    CHECK_THROWS_AS(k1_stabilization_check(Z, 2), Unsupported);
    FormRing F(Z, -1, LambdaStrategy::Maximal);
    CHECK_THROWS_AS(check_lambda_sr(F, 1), Unsupported);
    CHECK_THROWS_AS(ku1_stabilization_probe(F, 2), Unsupported);
}
