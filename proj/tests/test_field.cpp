#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "vci/field.hpp"

using namespace vci;

TEST_CASE("rational arithmetic") {
    Scalar half = Scalar::from_fraction(1, 2);
    Scalar third = Scalar::from_fraction(1, 3);
    CHECK((half + third).str() == "5/6");
    CHECK((Scalar::from_fraction(2, 3) * Scalar::from_fraction(3, 2)).is_one());
    CHECK((half - half).is_zero());
    CHECK(Scalar::from_fraction(-2, -4).str() == "1/2");
    CHECK(Scalar::from_fraction(2, -4).str() == "-1/2");
}

TEST_CASE("prime field arithmetic") {
    FieldDesc f5 = FieldDesc::prime_field(5);
    Scalar a = Scalar::from_residue(2, 5);
    Scalar b = Scalar::from_residue(3, 5);
    CHECK((a / b).residue() == 4);  // 3*4 = 12 = 2 mod 5
    CHECK((a + b).is_zero());
    CHECK((-b).residue() == 2);
    CHECK_THROWS_AS(a / Scalar::zero(f5), FieldError);
}

TEST_CASE("mixed-field operands rejected") {
    Scalar q = Scalar::from_int(1);
    Scalar p = Scalar::from_residue(1, 7);
    CHECK_THROWS_AS(q + p, FieldError);
}

TEST_CASE("mod_inverse") {
    CHECK(mod_inverse(2, 3) == 2);
    CHECK(mod_inverse(3, 2) == 1);
    // brute force over residues 0..10
    int expect = -1;
    for (int u = 0; u < 11; ++u)
        if (7 * u % 11 == 1) expect = u;
    CHECK(expect == 8);
    CHECK(mod_inverse(7, 11) == 8);
    CHECK_THROWS_AS(mod_inverse(4, 8), FieldError);
}

TEST_CASE("field axioms on randomized inputs") {
    std::mt19937 rng(12345);
    auto rand_q = [&] {
        std::uniform_int_distribution<int> d(-20, 20);
        int den = 0;
        while (den == 0) den = d(rng);
        return Scalar::from_fraction(d(rng), den);
    };
    auto rand_p = [&] {
        std::uniform_int_distribution<std::int64_t> d(0, kDefaultPrime - 1);
        return Scalar::from_residue(d(rng), kDefaultPrime);
    };
    for (int iter = 0; iter < 200; ++iter) {
        Scalar a = rand_q(), b = rand_q(), c = rand_q();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
        Scalar ap = rand_p(), bp = rand_p(), cp = rand_p();
        CHECK((ap + bp) + cp == ap + (bp + cp));
        CHECK(ap * (bp + cp) == ap * bp + ap * cp);
        if (!ap.is_zero()) CHECK((ap * ap.inverse()).is_one());
    }
}

TEST_CASE("serialization round trip") {
    for (const char* s : {"5/6", "-7", "0", "100000000000000000000000000001/7"}) {
        Scalar v = Scalar::parse(s, FieldDesc::rationals());
        CHECK(v.str() == s);
    }
    FieldDesc fp = FieldDesc::prime_field(kDefaultPrime);
    Scalar v = Scalar::parse("31999", fp);
    CHECK(v.str() == "31999");
    CHECK(FieldDesc::parse("fp:32003").p == 32003);
    CHECK(FieldDesc::parse("QQ").is_rational());
}
