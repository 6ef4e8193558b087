#include <catch2/catch_amalgamated.hpp>

#include "elgroups/elgroups.hpp"

using namespace elgroups;

TEST_CASE("modular addition reduces") {
    RingPtr R = RingSpec::modular(5);
    CHECK(RingElement::from_int(R, 3) + RingElement::from_int(R, 4) ==
          RingElement::from_int(R, 2));
}

TEST_CASE("free ring addition cancels to normal form") {
    RingPtr R = RingSpec::free_ring({"x", "y"});
    RingElement x = RingElement::named_generator(R, "x");
    RingElement y = RingElement::named_generator(R, "y");
    RingElement one = RingElement::one(R);
    CHECK((x * y + one) + (-one) == x * y);
}

TEST_CASE("integer addition is arbitrary precision") {
    RingPtr R = RingSpec::integers();
    Int big = Int(1) << 64;
    RingElement a = RingElement::from_int(R, big);
    CHECK((a + a).scalar_value() == Int(1) << 65);
}

TEST_CASE("free ring multiplication does not commute") {
    RingPtr R = RingSpec::free_ring({"x", "y"});
    RingElement x = RingElement::named_generator(R, "x");
    RingElement y = RingElement::named_generator(R, "y");
    CHECK(x * y != y * x);
}

TEST_CASE("zero divisors mod 4") {
    RingPtr R = RingSpec::modular(4);
    RingElement two = RingElement::from_int(R, 2);
    CHECK((two * two).is_zero());
}

TEST_CASE("one-variable distributivity") {
    RingPtr R = RingSpec::free_ring({"x"});
    RingElement x = RingElement::named_generator(R, "x");
    RingElement one = RingElement::one(R);
    CHECK((x + one) * (x - one) == x * x - one);
}

TEST_CASE("owner mismatch raises the distinct-ring error") {
    RingPtr R5 = RingSpec::modular(5);
    RingPtr R7 = RingSpec::modular(7);
    CHECK_THROWS_AS(RingElement::one(R5) + RingElement::one(R7), OwnerMismatch);
    CHECK_THROWS_AS(RingElement::one(R5) * RingElement::one(R7), OwnerMismatch);
}

TEST_CASE("structurally equal specs are compatible") {
    RingPtr a = RingSpec::modular(5);
    RingPtr b = RingSpec::modular(5);
    CHECK(RingElement::from_int(a, 2) + RingElement::from_int(b, 4) ==
          RingElement::from_int(a, 1));
}

TEST_CASE("involution on a free involutive ring reverses words") {
    RingPtr R = RingSpec::free_ring({"x", "y"}, true, -1);
    RingElement x = RingElement::named_generator(R, "x");
    RingElement y = RingElement::named_generator(R, "y");
    CHECK((x * y).star() == y.star() * x.star());
    CHECK((x * y).star().star() == x * y);
}

TEST_CASE("identity involution on the integers") {
    RingPtr R = RingSpec::integers();
    RingElement seven = RingElement::from_int(R, 7);
    CHECK(seven.star() == seven);
}

TEST_CASE("group ring of S3: involution is an anti-homomorphism") {
    // S3 via a transposition and a 3-cycle
    RingPtr R = RingSpec::group_ring({{2, 1, 3}, {2, 3, 1}});
    REQUIRE(R->group_order() == 6);

    // independent oracle: compose the underlying permutations directly
    auto compose = [&](std::uint32_t a, std::uint32_t b) {
        const Perm& pa = R->group_element(a);
        const Perm& pb = R->group_element(b);
        Perm c(pa.size());
        for (std::size_t i = 0; i < pa.size(); ++i) c[i] = pa[pb[i]];
        for (std::uint32_t k = 0; k < R->group_order(); ++k)
            if (R->group_element(k) == c) return k;
        FAIL("composition left the group");
        return 0u;
    };

    for (std::uint32_t g = 0; g < 6; ++g)
        for (std::uint32_t h = 0; h < 6; ++h) {
            RingElement eg = RingElement::generator(R, static_cast<std::uint16_t>(g));
            RingElement eh = RingElement::generator(R, static_cast<std::uint16_t>(h));
            RingElement prod = RingElement::generator(
                R, static_cast<std::uint16_t>(compose(g, h)));
            CHECK(eg * eh == prod);
            CHECK((eg * eh).star() == eh.star() * eg.star());
            CHECK(eg.star() ==
                  RingElement::generator(
                      R, static_cast<std::uint16_t>(R->group_inverse(g))));
        }
}

TEST_CASE("units of small modular rings by exhaustive pairing") {
    // independent oracle over raw residues
    auto unit_residues = [](long m) {
        std::vector<long> us;
        for (long u = 0; u < m; ++u)
            for (long v = 0; v < m; ++v)
                if ((u * v) % m == 1) {
                    us.push_back(u);
                    break;
                }
        return us;
    };

    for (long m : {2L, 4L, 5L}) {
        RingPtr R = RingSpec::modular(m);
        auto units = units_of(R);
        auto expect = unit_residues(m);
        REQUIRE(units.size() == expect.size());
        for (std::size_t i = 0; i < units.size(); ++i)
            CHECK(units[i] == RingElement::from_int(R, expect[i]));
    }
    CHECK(units_of(RingSpec::modular(5)).size() == 4);
    CHECK(units_of(RingSpec::modular(4)).size() == 2);
    CHECK(units_of(RingSpec::modular(2)).size() == 1);
}

TEST_CASE("units_of rejects infinite rings") {
    CHECK_THROWS_AS(units_of(RingSpec::integers()), Unsupported);
    CHECK_THROWS_AS(units_of(RingSpec::group_ring({{2, 1, 3}})), Unsupported);
}

TEST_CASE("ring axioms hold exactly") {
    SECTION("exhaustive over Z/4") {
        RingPtr R = RingSpec::modular(4);
        auto xs = ring_elements(R);
        for (const auto& a : xs)
            for (const auto& b : xs) {
                CHECK(a + b == b + a);
                for (const auto& c : xs) {
                    CHECK((a + b) + c == a + (b + c));
                    CHECK((a * b) * c == a * (b * c));
                    CHECK(a * (b + c) == a * b + a * c);
                    CHECK((a + b) * c == a * c + b * c);
                }
                CHECK(a * RingElement::one(R) == a);
                CHECK(RingElement::one(R) * a == a);
            }
    }
    SECTION("sampled over the free involutive ring") {
        RingPtr R = RingSpec::free_ring({"x", "y"}, true);
        RingElement x = RingElement::named_generator(R, "x");
        RingElement y = RingElement::named_generator(R, "y");
        std::vector<RingElement> xs = {x, y, x * y + RingElement::one(R), x.star(),
                                       x * x - y};
        for (const auto& a : xs)
            for (const auto& b : xs)
                for (const auto& c : xs) {
                    CHECK((a * b) * c == a * (b * c));
                    CHECK(a * (b + c) == a * b + a * c);
                }
    }
}

TEST_CASE("free ring multiplication never reorders letters") {
    RingPtr R = RingSpec::free_ring({"x", "y"});
    RingElement x = RingElement::named_generator(R, "x");
    RingElement y = RingElement::named_generator(R, "y");
    RingElement w = x * y * x;
    REQUIRE(w.terms().size() == 1);
    CHECK(w.terms().begin()->first == Word{0, 1, 0});
}

TEST_CASE("characteristic consistency") {
    for (long m : {2L, 3L, 6L}) {
        RingPtr R = RingSpec::modular(m);
        RingElement acc = RingElement::zero(R);
        for (long i = 0; i < m; ++i) acc = acc + RingElement::one(R);
        CHECK(acc.is_zero());
        CHECK(R->characteristic() == m);
    }
    CHECK(RingSpec::integers()->characteristic() == 0);
    CHECK(RingSpec::free_ring({"x"})->characteristic() == 0);
    CHECK(RingSpec::group_ring({{2, 1}})->characteristic() == 0);
}

TEST_CASE("spec validation errors") {
    CHECK_THROWS_AS(RingSpec::modular(1), Error);
    CHECK_THROWS_AS(RingSpec::free_ring({"x", "x"}), Error);
    CHECK_THROWS_AS(RingSpec::free_ring({}), Error);
    CHECK_THROWS_AS(RingSpec::group_ring({{1, 1, 2}}), Error);
}

TEST_CASE("element literal parsing") {
    SECTION("modular and integer literals") {
        CHECK(parse_element(RingSpec::modular(5), "7") ==
              RingElement::from_int(RingSpec::modular(5), 2));
        CHECK(parse_element(RingSpec::integers(), "-12").scalar_value() == -12);
    }
    SECTION("free involutive literals") {
        RingPtr R = RingSpec::free_ring({"x", "y"}, true, -1);
        RingElement x = RingElement::named_generator(R, "x");
        RingElement y = RingElement::named_generator(R, "y");
        RingElement two = RingElement::from_int(R, 2);
        RingElement three = RingElement::from_int(R, 3);
        CHECK(parse_element(R, "3·xy* + 2") == three * x * y.star() + two);
        CHECK(parse_element(R, "x - y") == x - y);
        CHECK(parse_element(R, "-2x*") == -(two * x.star()));
    }
    SECTION("round trip through str()") {
        RingPtr R = RingSpec::free_ring({"x", "y"}, true);
        RingElement v = parse_element(R, "3·xy* + 2 - x");
        CHECK(parse_element(R, v.str()) == v);
    }
    SECTION("parse errors carry position context") {
        RingPtr R = RingSpec::free_ring({"x"});
        CHECK_THROWS_AS(parse_element(R, "x + "), ParseError);
        CHECK_THROWS_AS(parse_element(R, "z"), ParseError);
        CHECK_THROWS_AS(parse_element(R, "x*"), ParseError);  // no involution declared
        CHECK_THROWS_AS(parse_element(R, ""), ParseError);
    }
}

TEST_CASE("encoding is stable and hash respects normalization") {
    RingPtr R = RingSpec::modular(5);
    CHECK(RingElement::from_int(R, 7).hash() == RingElement::from_int(R, 2).hash());
    RingPtr F = RingSpec::free_ring({"x", "y"});
    RingElement a = RingElement::named_generator(F, "x") * RingElement::named_generator(F, "y");
    RingElement b = RingElement::named_generator(F, "y") * RingElement::named_generator(F, "x");
    CHECK(a.hash() != b.hash());
}
