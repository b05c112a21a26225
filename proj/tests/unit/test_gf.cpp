#include <doctest.h>

#include "arclab/error.hpp"
#include "arclab/gf.hpp"
#include "oracles.hpp"

using namespace arclab;

namespace {

const std::uint32_t kOrders[] = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32, 49, 64};

}  // namespace

TEST_CASE("prime and small extension fields")
{
    const FieldSpec gf5(5, 1);
    CHECK(gf5.q() == 5);
    CHECK(gf5.modulus().empty());
    CHECK(gf5.mul(gf5.element(2), gf5.element(3)) == gf5.element(1));

    const FieldSpec gf7(7, 1);
    CHECK(gf7.inv(gf7.element(3)) == gf7.element(5));

    const FieldSpec gf4(2, 2);
    CHECK(gf4.modulus() == std::vector<std::uint32_t>{1, 1, 1});
    // x * x = x + 1 with x encoded as index 2 and x + 1 as 3
    CHECK(gf4.mul(gf4.element(2), gf4.element(2)) == gf4.element(3));

    CHECK(FieldSpec(2, 4).modulus() == std::vector<std::uint32_t>{1, 1, 0, 0, 1});
    CHECK(FieldSpec(5, 2).modulus() == std::vector<std::uint32_t>{2, 0, 1});
}

TEST_CASE("field construction preconditions")
{
    CHECK_THROWS_AS(FieldSpec(4, 1), PreconditionError);
    CHECK_THROWS_AS(FieldSpec(1, 1), PreconditionError);
    CHECK_THROWS_AS(FieldSpec(2, 0), PreconditionError);
    CHECK_THROWS_AS(FieldSpec(2, 21), PreconditionError);
    CHECK_THROWS_AS(field_of_order(6), PreconditionError);
    CHECK(field_of_order(81).p() == 3);
    CHECK(field_of_order(81).r() == 4);
    const FieldSpec gf3(3, 1);
    CHECK_THROWS_AS(gf3.inv(gf3.zero()), PreconditionError);
    CHECK_THROWS_AS(gf3.element(3), PreconditionError);
}

TEST_CASE("modulus matches the independent irreducible search")
{
    for (const std::uint32_t q : kOrders) {
        const FieldSpec f = field_of_order(q);
        const oracle::Field o(q);
        if (o.r() == 1) {
            CHECK(f.modulus().empty());
            continue;
        }
        std::vector<std::uint32_t> expect(o.modulus().begin(), o.modulus().end());
        CHECK_MESSAGE(f.modulus() == expect, "q = " << q);
        CHECK(is_irreducible(f.modulus(), f.p()));
    }
}

TEST_CASE("multiplication and addition tables agree with the oracle field")
{
    for (const std::uint32_t q : kOrders) {
        const FieldSpec f = field_of_order(q);
        const oracle::Field o(q);
        for (std::uint32_t a = 0; a < q; ++a) {
            for (std::uint32_t b = 0; b < q; ++b) {
                REQUIRE(f.mul(f.element(a), f.element(b)).index == o.mul(a, b));
                REQUIRE(f.add(f.element(a), f.element(b)).index == o.add(a, b));
            }
        }
    }
}

TEST_CASE("field axioms exhaustively for q <= 64")
{
    for (const std::uint32_t q : kOrders) {
        const FieldSpec f = field_of_order(q);
        for (std::uint32_t i = 0; i < q; ++i) {
            const FieldElement a = f.element(i);
            CHECK(f.add(a, f.neg(a)) == f.zero());
            CHECK(f.sub(a, a) == f.zero());
            for (std::uint32_t j = 0; j < q; ++j) {
                const FieldElement b = f.element(j);
                REQUIRE(f.add(a, b) == f.add(b, a));
                REQUIRE(f.mul(a, b) == f.mul(b, a));
                for (std::uint32_t k = 0; k < q; k += (q > 16 ? 7 : 1)) {
                    const FieldElement c = f.element(k);
                    REQUIRE(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
                    REQUIRE(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
                    REQUIRE(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
                }
            }
        }
    }
}

TEST_CASE("Lagrange and inverse involution for all tabulated orders")
{
    for (std::uint32_t q = 2; q <= 1024; ++q) {
        FieldSpec f = FieldSpec(2, 1);
        try {
            f = field_of_order(q);
        } catch (const PreconditionError&) {
            continue;
        }
        CHECK(f.tabulated());
        for (std::uint32_t i = 1; i < q; ++i) {
            const FieldElement a = f.element(i);
            REQUIRE(f.pow(a, q - 1) == f.one());
            REQUIRE(f.mul(a, f.inv(a)) == f.one());
            REQUIRE(f.inv(f.inv(a)) == a);
        }
    }
}

TEST_CASE("untabulated arithmetic matches table-free identities")
{
    const FieldSpec f(2, 11);  // 2048 > table cap
    CHECK_FALSE(f.tabulated());
    for (std::uint32_t i = 1; i < f.q(); i += 37) {
        const FieldElement a = f.element(i);
        CHECK(f.mul(a, f.inv(a)) == f.one());
        CHECK(f.pow(a, f.q() - 1) == f.one());
        CHECK(f.add(a, a) == f.zero());
    }
    const FieldSpec g(3, 7);
    for (std::uint32_t i = 1; i < g.q(); i += 101) {
        const FieldElement a = g.element(i);
        CHECK(g.mul(a, g.inv(a)) == g.one());
        CHECK(g.add(g.add(a, a), a) == g.zero());
    }
}
