#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "vci/bipoly.hpp"
#include "vci/geometry.hpp"

using namespace vci;

namespace {

const FieldDesc QQ = FieldDesc::rationals();

Poly var(int i) { return Poly::variable(i, QQ); }
Poly X0() { return var(Monomial::kX0); }
Poly X1() { return var(Monomial::kX1); }
Poly Y0() { return var(Monomial::kY0); }
Poly Y1() { return var(Monomial::kY1); }

BiProjPoint pt(int x0, int x1, int y0, int y1) {
    return {ProjPoint::make(Scalar::from_int(x0), Scalar::from_int(x1)),
            ProjPoint::make(Scalar::from_int(y0), Scalar::from_int(y1))};
}

std::mt19937 rng(987654);

Poly random_product_of_linear(FieldDesc fd, int nx, int ny) {
    std::uniform_int_distribution<int> d(-3, 3);
    Poly p = Poly::constant(Scalar::one(fd));
    for (int i = 0; i < nx; ++i)
        p *= Poly::term(Monomial::var(Monomial::kX0), Scalar::from_int(d(rng), fd)) +
             Poly::term(Monomial::var(Monomial::kX1), Scalar::from_int(d(rng) == 0 ? 1 : d(rng), fd));
    for (int i = 0; i < ny; ++i)
        p *= Poly::term(Monomial::var(Monomial::kY0), Scalar::from_int(d(rng), fd)) +
             Poly::term(Monomial::var(Monomial::kY1), Scalar::from_int(d(rng) == 0 ? 1 : d(rng), fd));
    return p;
}

}  // namespace

TEST_CASE("arithmetic and bidegrees") {
    Poly f = X0() * Y0();
    Poly g = X1() * Y1();
    Poly prod = f * g;
    CHECK(prod.bidegree() == Bidegree{2, 2});
    CHECK(prod == X0() * X1() * Y0() * Y1());

    Poly sum = bihom_add(f, g);
    CHECK(sum.bidegree() == Bidegree{1, 1});
    CHECK(sum.size() == 2);

    // g = x0(x1 - x0)(y1 - y0) has bidegree (2,1)
    Poly ex16 = X0() * (X1() - X0()) * (Y1() - Y0());
    CHECK(ex16.bidegree() == Bidegree{2, 1});

    CHECK_THROWS_AS(bihom_add(f, prod), FieldError);
}

TEST_CASE("evaluation") {
    Poly f = X1() * Y1();
    CHECK(f.evaluate(pt(1, 0, 0, 1)).is_zero());
    CHECK((X0() * Y0()).evaluate(pt(1, 0, 0, 1)).is_zero());
    CHECK((X0() * Y0()).evaluate(pt(1, 1, 1, 1)).is_one());
}

TEST_CASE("evaluate is multiplicative on random inputs") {
    for (int i = 0; i < 40; ++i) {
        Poly f = random_product_of_linear(QQ, 2, 1);
        Poly g = random_product_of_linear(QQ, 1, 2);
        std::uniform_int_distribution<int> d(-4, 4);
        BiProjPoint p = pt(d(rng), 1, d(rng), 1);
        CHECK((f * g).evaluate(p) == f.evaluate(p) * g.evaluate(p));
    }
}

TEST_CASE("restrict_to_ruling") {
    Poly g = X0() * (X1() - X0()) * (Y1() - Y0());
    Ruling vert = Ruling::through(Ruling::Axis::Vertical,
                                  ProjPoint::finite(Scalar::from_int(1)), QQ);
    CHECK(restrict_to_ruling(g, vert).is_zero());  // (x1 - x0) kills it

    Poly f = X1() * Y1();
    Ruling horiz = Ruling::through(Ruling::Axis::Horizontal,
                                   ProjPoint::make(Scalar::from_int(0), Scalar::from_int(1)), QQ);
    BinaryForm r = restrict_to_ruling(f, horiz);  // substitute y0=0, y1=1 -> x1
    CHECK(r.pair == BinaryForm::Pair::X);
    REQUIRE(r.coeffs.size() == 2);
    CHECK(r.coeffs[0].is_zero());
    CHECK(r.coeffs[1].is_one());

    // a generic (2,1)-form restricted to a non-component vertical ruling has degree 1 in y
    Ruling vert2 = Ruling::through(Ruling::Axis::Vertical,
                                   ProjPoint::finite(Scalar::from_int(7)), QQ);
    BinaryForm r2 = restrict_to_ruling(g, vert2);
    CHECK(r2.pair == BinaryForm::Pair::Y);
    CHECK(!r2.is_zero());
    CHECK(r2.degree() == 1);
}

TEST_CASE("restriction vanishes iff linear form divides") {
    for (int i = 0; i < 30; ++i) {
        Poly f = random_product_of_linear(QQ, 2, 1);
        if (f.is_zero()) continue;
        std::uniform_int_distribution<int> d(-3, 3);
        Ruling r = Ruling::through(Ruling::Axis::Vertical,
                                   ProjPoint::finite(Scalar::from_int(d(rng))), QQ);
        bool zero_restriction = restrict_to_ruling(f, r).is_zero();
        bool divides = !f.is_zero() && poly_gcd(f, r.linear_form) == r.linear_form.monic();
        CHECK(zero_restriction == divides);
    }
}

TEST_CASE("gcd basics") {
    CHECK(poly_gcd(X0() * Y0(), X0() * Y1()) == X0());
    CHECK(poly_gcd(X0() * Y0(), X1() * Y1()).is_unit());
    CHECK(poly_gcd(X0() * (X1() - X0()), X0() * (Y1() - Y0())) == X0());
}

TEST_CASE("gcd divides both inputs; common factors recovered") {
    for (int i = 0; i < 25; ++i) {
        Poly f = random_product_of_linear(QQ, 1, 1);
        Poly g = random_product_of_linear(QQ, 2, 0);
        Poly h = random_product_of_linear(QQ, 1, 1);
        if (f.is_zero() || g.is_zero() || h.is_zero()) continue;
        Poly d = poly_gcd(f * h, g * h);
        CHECK(exact_divide(f * h, d).has_value());
        CHECK(exact_divide(g * h, d).has_value());
        CHECK(exact_divide(d, poly_gcd(f, g) * h).has_value());
    }
}

TEST_CASE("binary roots") {
    FieldDesc fd = QQ;
    // y0*y1: roots [0:1] and [1:0]
    BinaryForm f1{BinaryForm::Pair::Y,
                  {Scalar::zero(fd), Scalar::one(fd), Scalar::zero(fd)}};  // u0*u1
    auto r1 = binary_roots(f1);
    REQUIRE(r1.roots.size() == 2);
    CHECK(r1.residual_degree == 0);
    CHECK(r1.roots[0].coord1.is_zero());  // [1:0]
    CHECK(r1.roots[0].multiplicity == 1);
    CHECK(r1.roots[1].coord0.is_zero());  // [0:1]
    CHECK(r1.roots[1].multiplicity == 1);

    // (y1 - y0)^2 = y0^2 - 2 y0 y1 + y1^2
    BinaryForm f2{BinaryForm::Pair::Y,
                  {Scalar::one(fd), Scalar::from_int(-2), Scalar::one(fd)}};
    auto r2 = binary_roots(f2);
    REQUIRE(r2.roots.size() == 1);
    CHECK(r2.roots[0].coord0.is_one());
    CHECK(r2.roots[0].coord1.is_one());
    CHECK(r2.roots[0].multiplicity == 2);

    // x0^2 + x1^2 has no rational roots
    BinaryForm f3{BinaryForm::Pair::X, {Scalar::one(fd), Scalar::zero(fd), Scalar::one(fd)}};
    auto r3 = binary_roots(f3);
    CHECK(r3.roots.empty());
    CHECK(r3.residual_degree == 2);
}

TEST_CASE("binary roots over a prime field") {
    FieldDesc f7 = FieldDesc::prime_field(7);
    // (z - 2)^2 (z - 5) homogenized in x
    Scalar two = Scalar::from_residue(2, 7), five = Scalar::from_residue(5, 7);
    Poly z = Poly::variable(Monomial::kX0, f7);
    Poly w = Poly::variable(Monomial::kX1, f7);
    Poly form = (z - w * two) * (z - w * two) * (z - w * five);
    Ruling horiz = Ruling::through(Ruling::Axis::Horizontal,
                                   ProjPoint::finite(Scalar::from_residue(3, 7)), f7);
    BinaryForm bf = restrict_to_ruling(form, horiz);
    auto rr = binary_roots(bf);
    REQUIRE(rr.roots.size() == 2);
    CHECK(rr.residual_degree == 0);
    int total = 0;
    for (auto& r : rr.roots) total += r.multiplicity;
    CHECK(total == 3);
}

TEST_CASE("pretty printing uses the global order") {
    Poly f = X0() * X1() * Y0() - X1() * X1() * Y1();
    CHECK(f.str() == "x0*x1*y0 - x1^2*y1");
    CHECK(Poly::zero(QQ).str() == "0");
}
