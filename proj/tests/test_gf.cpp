#include <catch2/catch_amalgamated.hpp>

#include "lrcpir/gf.hpp"
#include "support/oracles.hpp"
#include "support/test_fixtures.hpp"

using namespace lrcpir;

TEST_CASE("field construction") {
    SECTION("GF(8) with x^3+x+1") {
        FieldPtr f = Field::make(2, 3, {1, 0, 1, 1});
        CHECK(f->characteristic() == 2);
        CHECK(f->degree() == 3);
        CHECK(f->size() == 8);
        CHECK(element_order(f->primitive_element()) == 7);
    }
    SECTION("GF(2) as a degree-1 field") {
        FieldPtr f = Field::make(2, 1, {1, 1});
        CHECK(f->size() == 2);
        CHECK(f->one() + f->one() == f->zero());
    }
    SECTION("reducible polynomial is rejected") {
        // oracle: (x+1)(x^2+x+1) = x^3+x^2+x+1 over GF(2)
        auto product = oracles::poly_mul(2, {1, 1}, {1, 1, 1});
        CHECK(product == std::vector<unsigned>{1, 0, 0, 1});  // low degree first
        CHECK_THROWS_AS(Field::make(2, 3, {1, 1, 1, 1}), ReduciblePolynomial);
    }
    SECTION("composite characteristic is rejected") {
        CHECK_THROWS_AS(Field::make(4, 1, {1, 1}), NotPrime);
        CHECK_THROWS_AS(Field::make(6, 2, {1, 0, 1}), NotPrime);
    }
    SECTION("malformed polynomial is rejected") {
        CHECK_THROWS_AS(Field::make(2, 3, {1, 0, 1}), Error);     // degree too low
        CHECK_THROWS_AS(Field::make(2, 2, {0, 1, 1}), Error);     // not monic
    }
    SECTION("designated primitive element") {
        FieldPtr f = Field::make(2, 3, {1, 0, 1, 1}, 2u);  // the class of x
        CHECK(f->primitive_element().value() == 2);
        CHECK_THROWS_AS(Field::make(2, 3, {1, 0, 1, 1}, 1u), Error);  // order 1
        CHECK_THROWS_AS(Field::make(2, 3, {1, 0, 1, 1}, 0u), Error);
    }
}

TEST_CASE("arithmetic in GF(8)") {
    FieldPtr f = testfx::gf8();
    FieldElement z = f->primitive_element();

    SECTION("reduction by the defining polynomial") {
        CHECK(z * (z * z) == parse_element(f, "z^3"));
        CHECK(parse_element(f, "z^3") == f->element(3));  // z^3 = z + 1
        CHECK(parse_element(f, "z^3") * z == f->element(6));  // z^4 = z^2 + z
    }
    SECTION("characteristic-2 identities") {
        for (unsigned v = 0; v < f->size(); ++v) {
            FieldElement a = f->element(v);
            CHECK(a + a == f->zero());
        }
    }
    SECTION("division") {
        FieldElement a = parse_element(f, "z^5");
        CHECK(a / a == f->one());
        CHECK(a / f->one() == a);
        CHECK_THROWS_AS(a / f->zero(), DivisionByZero);
    }
    SECTION("cross-field operations are rejected") {
        FieldPtr g = Field::make(2, 3, {1, 0, 1, 1});  // same parameters, distinct spec
        CHECK_THROWS_AS(f->one() + g->one(), FieldMismatch);
    }
}

TEST_CASE("element order") {
    FieldPtr f = testfx::gf8();
    CHECK(element_order(f->one()) == 1);
    CHECK_THROWS_AS(element_order(f->zero()), ZeroElement);

    // oracle: repeated multiplication until the identity reappears
    auto order_by_multiplication = [&](FieldElement a) {
        FieldElement acc = a;
        std::uint64_t e = 1;
        while (acc != f->one()) {
            acc = acc * a;
            ++e;
        }
        return e;
    };
    FieldElement z = f->primitive_element();
    CHECK(order_by_multiplication(z) == 7);
    CHECK(element_order(z) == 7);
    FieldElement z3 = parse_element(f, "z^3");  // z+1; 7 is prime, so primitive
    CHECK(order_by_multiplication(z3) == 7);
    CHECK(element_order(z3) == 7);
}

TEST_CASE("field axioms hold exhaustively") {
    for (FieldPtr f : {Field::make(2, 8, {1, 0, 0, 0, 1, 1, 1, 0, 1}), Field::make(3, 2, {1, 0, 1}),
                       Field::make(7, 1, {1, 4}), testfx::gf8()}) {
        const unsigned q = f->size();
        std::uint64_t violations = 0;
        for (unsigned a = 1; a < q; ++a)
            if (f->mul(a, f->inv(a)) != 1) ++violations;
        for (unsigned a = 0; a < q; ++a)
            for (unsigned b = 0; b < q; ++b)
                for (unsigned c = 0; c < q; ++c) {
                    if (f->mul(f->mul(a, b), c) != f->mul(a, f->mul(b, c))) ++violations;
                    if (f->mul(a, f->add(b, c)) != f->add(f->mul(a, b), f->mul(a, c))) ++violations;
                }
        INFO("q = " << q);
        REQUIRE(violations == 0);
    }
}

TEST_CASE("Frobenius endomorphism") {
    for (FieldPtr f : {Field::make(2, 6, {1, 0, 0, 0, 0, 1, 1}), Field::make(3, 2, {1, 0, 1}),
                       Field::make(5, 2, {1, 0, 2})}) {
        const unsigned p = f->characteristic(), q = f->size();
        std::uint64_t violations = 0;
        for (unsigned a = 0; a < q; ++a)
            for (unsigned b = 0; b < q; ++b)
                if (f->pow(f->add(a, b), p) != f->add(f->pow(a, p), f->pow(b, p))) ++violations;
        INFO("q = " << q);
        REQUIRE(violations == 0);
    }
}

TEST_CASE("exponent table round trip") {
    for (FieldPtr f : {testfx::gf8(), Field::make(2, 4, {1, 0, 0, 1, 1}), Field::make(3, 2, {1, 0, 1})}) {
        for (unsigned i = 0; i + 1 < f->size(); ++i)
            REQUIRE(f->log(f->exp_element(i).value()) == i);
    }
}

TEST_CASE("field literal and element text round trips") {
    FieldPtr f = testfx::gf8();
    CHECK(field_literal(*f) == "GF(2^3):poly=[1,0,1,1]");
    FieldPtr g = parse_field_literal(field_literal(*f));
    CHECK(g->size() == f->size());
    CHECK(g->poly() == f->poly());

    for (unsigned v = 0; v < f->size(); ++v) {
        FieldElement a = f->element(v);
        CHECK(parse_element(f, to_string(a)) == a);
    }
    CHECK(to_string(f->zero()) == "0");
    CHECK(to_string(f->one()) == "1");
    CHECK(to_string(f->primitive_element()) == "z");
    CHECK_THROWS_AS(parse_element(f, "z^x"), ParseError);
    CHECK_THROWS_AS(parse_field_literal("GF(2^3):poly=[1,0,1"), ParseError);
}
