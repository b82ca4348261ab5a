#include <set>

#include "doctest.h"
#include "modinv/errors.hpp"
#include "modinv/field.hpp"

using namespace modinv;

TEST_SUITE_BEGIN("field");

TEST_CASE("GF(4) default construction") {
    GF2s f(2);
    CHECK(f.q() == 4);
    CHECK(f.modulus() == 0b111u);  // z^2+z+1
    CHECK(f.primitive() == 2);
    // the unit group is cyclic of order 3
    CHECK(f.mul(2, 2) == 3);
    CHECK(f.mul(f.mul(2, 2), 2) == 1);

    // {x^2+x} over GF(4) is {0,1}, so w must be 2 or 3
    std::set<Fq> image;
    for (Fq x = 0; x < 4; ++x) image.insert(GF2s::add(f.mul(x, x), x));
    CHECK(image == std::set<Fq>{0, 1});
    CHECK(image.count(f.w()) == 0);
    CHECK((f.w() == 2 || f.w() == 3));
}

TEST_CASE("GF(8) has a primitive element of order 7") {
    GF2s f(3);
    CHECK(f.q() == 8);
    CHECK(f.modulus() == 0b1011u);  // z^3+z+1
    const Fq g = f.primitive();
    Fq p = g;
    for (int i = 1; i < 7; ++i) {
        CHECK(p != 1);
        p = f.mul(p, g);
    }
    CHECK(p == 1);
}

TEST_CASE("basic arithmetic laws") {
    for (int s : {2, 3, 4}) {
        GF2s f(s);
        for (std::uint32_t a = 0; a < f.q(); ++a) {
            CHECK(GF2s::add(Fq(a), Fq(a)) == 0);
            if (a != 0) {
                CHECK(f.pow(Fq(a), f.q() - 1) == 1);
                CHECK(f.mul(f.inv(Fq(a)), Fq(a)) == 1);
            }
        }
        // Frobenius is additive
        for (std::uint32_t a = 0; a < f.q(); ++a)
            for (std::uint32_t b = 0; b < f.q(); ++b)
                CHECK(f.mul(GF2s::add(Fq(a), Fq(b)), GF2s::add(Fq(a), Fq(b))) ==
                      GF2s::add(f.mul(Fq(a), Fq(a)), f.mul(Fq(b), Fq(b))));
    }
}

TEST_CASE("power sums over the unit group") {
    GF2s f4(2);
    CHECK(f4.sum_of_unit_powers(3) == 1);
    CHECK(f4.sum_of_unit_powers(2) == 0);
    CHECK(f4.sum_of_unit_powers(0) == 1);

    for (int s : {2, 3, 4}) {
        GF2s f(s);
        const unsigned q = f.q();
        for (unsigned e = 0; e <= 3 * (q - 1); ++e) {
            const Fq expected = e % (q - 1) == 0 ? 1 : 0;
            CHECK(f.sum_of_unit_powers(e) == expected);
        }
    }
}

TEST_CASE("w avoids the Artin-Schreier image") {
    for (int s : {2, 3, 4}) {
        GF2s f(s);
        for (std::uint32_t x = 0; x < f.q(); ++x)
            CHECK(GF2s::add(f.mul(Fq(x), Fq(x)), Fq(x)) != f.w());
        CHECK(f.trace(f.w()) == 1);
    }
}

TEST_CASE("construction errors") {
    // z^2+1 = (z+1)^2 is reducible
    CHECK_THROWS_WITH_AS(GF2s(2, 0b101u), doctest::Contains("reducible"), construction_error);
    CHECK_THROWS_AS(GF2s(1), usage_error);
    CHECK_THROWS_AS(GF2s(17), usage_error);
    CHECK_THROWS_AS(GF2s(3, 0b111u), usage_error);  // wrong degree
    GF2s f(2);
    CHECK_THROWS_AS(f.inv(0), arithmetic_error);
    CHECK_THROWS_AS(f.pow(0, -1), arithmetic_error);
}

TEST_CASE("modulus exponent parsing") {
    CHECK(GF2s::parse_modulus_exponents("2,1,0") == 0b111u);
    CHECK(GF2s::parse_modulus_exponents("3,1,0") == 0b1011u);
    CHECK_THROWS_AS(GF2s::parse_modulus_exponents(""), usage_error);
    CHECK_THROWS_AS(GF2s::parse_modulus_exponents("2,x"), usage_error);
    GF2s f(2, GF2s::parse_modulus_exponents("2,1,0"));
    CHECK(f.q() == 4);
}

TEST_SUITE_END();
