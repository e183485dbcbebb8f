#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "vci/oracle.hpp"

using namespace vci;

namespace {

const FieldDesc QQ = FieldDesc::rationals();
const FieldDesc FP = FieldDesc::prime_field(kDefaultPrime);

Poly X0(FieldDesc fd = QQ) { return Poly::variable(Monomial::kX0, fd); }
Poly X1(FieldDesc fd = QQ) { return Poly::variable(Monomial::kX1, fd); }
Poly Y0(FieldDesc fd = QQ) { return Poly::variable(Monomial::kY0, fd); }
Poly Y1(FieldDesc fd = QQ) { return Poly::variable(Monomial::kY1, fd); }

PointSet grid(const std::vector<std::pair<int, int>>& coords, FieldDesc fd = QQ) {
    std::vector<BiProjPoint> pts;
    for (auto [x, y] : coords)
        pts.push_back({ProjPoint::finite(Scalar::from_int(x, fd)),
                       ProjPoint::finite(Scalar::from_int(y, fd))});
    return PointSet::make(pts, fd);
}

}  // namespace

TEST_CASE("saturation table on a two-point complete intersection") {
    // <x0 y0, x1 y1> cuts out {([0:1],[1:0]), ([1:0],[0:1])}; the
    // saturated quotient has Hilbert value 2 in large degrees.
    Ideal ideal = Ideal::make({X0() * Y0(), X1() * Y1()}, QQ);
    SaturationTable table(ideal, 6, 6);
    CHECK(table.quotient_dim(3, 3) == 2);
    CHECK(table.quotient_dim(2, 2) == 2);
    CHECK(table.quotient_dim(1, 1) == 2);
    CHECK(table.contains(X0() * Y0()));

    // strict growth in low degree: <x0^2 y0, x0 x1 y0> saturates to
    // <x0 y0>, which is already nonzero at (1,1)
    SaturationTable strict(Ideal::make({X0() * X0() * Y0(), X0() * X1() * Y0()}, QQ), 5, 5);
    CHECK(strict.ideal_dim(1, 1) == 0);
    CHECK(strict.saturation_dim(1, 1) == 1);
}

TEST_CASE("saturation table agrees with the groebner saturation") {
    std::vector<Ideal> samples = {
        Ideal::make({X0() * X0() * Y0(), X0() * X1() * Y0()}, QQ),
        Ideal::make({X0() * Y0(), X0() * Y1()}, QQ),
        Ideal::make({X0() * Y0() - X1() * Y1(), X0() * Y1()}, QQ),
        Ideal::make({(X0() - X1()) * Y0(), X1() * (Y0() - Y1())}, QQ),
    };
    for (const Ideal& ideal : samples) {
        SaturationTable table(ideal, 5, 5);
        Ideal sat = saturate_by_irrelevant(ideal);
        for (int a = 0; a <= 2; ++a)
            for (int b = 0; b <= 2; ++b)
                CHECK(table.saturation_dim(a, b) ==
                      (a + 1) * (b + 1) - hilbert_value(sat, {a, b}));
    }
}

TEST_CASE("saturation table membership on a stable example") {
    // <x0^2 y0, x0 x1 y0> saturates to <x0 y0>.
    Ideal ideal = Ideal::make({X0() * X0() * Y0(), X0() * X1() * Y0()}, QQ);
    SaturationTable table(ideal, 5, 5);
    CHECK(table.contains(X0() * Y0()));
    CHECK(!table.contains(X1() * Y0()));
    CHECK(!table.contains(X0() * Y1()));
}

TEST_CASE("saturated input is a fixpoint") {
    PointSet x = grid({{0, 0}, {1, 1}});
    Ideal ix = vanishing_ideal(x);
    SaturationTable table(ix, 5, 5);
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b)
            CHECK(table.saturation_dim(a, b) ==
                  (a + 1) * (b + 1) - hilbert_value(ix, {a, b}));
}

TEST_CASE("witness search: rectangle is found") {
    PointSet x = grid({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    WitnessSearchResult r = exhaustive_witness_search(x);
    CHECK(r.outcome == SearchOutcome::Found);
    REQUIRE(r.certificate);
    CHECK(verify_vci(x, r.certificate->f, r.certificate->g, VerifyMode::Saturation).accepted);
}

TEST_CASE("witness search: cross configurations are exhausted") {
    CHECK(exhaustive_witness_search(grid({{0, 0}, {1, 0}, {0, 1}})).outcome ==
          SearchOutcome::Exhausted);
    CHECK(exhaustive_witness_search(grid({{0, 0}, {1, 0}, {2, 0}, {0, 1}, {1, 1}})).outcome ==
          SearchOutcome::Exhausted);
}

TEST_CASE("witness search: hyperbola six points over F_p") {
    std::vector<BiProjPoint> pts;
    for (int u : {1, 2, 3, 4})
        pts.push_back({ProjPoint::finite(Scalar::from_int(u, FP)),
                       ProjPoint::make(Scalar::one(FP), Scalar::from_int(u, FP))});
    pts.push_back({ProjPoint::infinity(FP), ProjPoint::finite(Scalar::one(FP))});
    pts.push_back({ProjPoint::infinity(FP), ProjPoint::infinity(FP)});
    PointSet x = PointSet::make(pts, FP);
    WitnessSearchResult r = exhaustive_witness_search(x);
    CHECK(r.outcome == SearchOutcome::Found);
    REQUIRE(r.certificate);
    CHECK(verify_vci(x, r.certificate->f, r.certificate->g, VerifyMode::Fast).accepted);
}

TEST_CASE("witness search agrees with the classifier on small sets") {
    std::vector<PointSet> sets = {
        grid({{0, 0}}),
        grid({{0, 0}, {1, 1}}),
        grid({{0, 0}, {1, 0}, {2, 0}}),
        grid({{0, 0}, {1, 0}, {0, 1}, {1, 1}, {2, 2}}),
        grid({{0, 0}, {1, 0}, {2, 0}, {0, 1}, {0, 2}}),
    };
    for (const PointSet& x : sets) {
        VciVerdict v = analyze(x);
        WitnessSearchResult r = exhaustive_witness_search(x);
        if (v.status == VerdictStatus::Vci) CHECK(r.outcome != SearchOutcome::Exhausted);
        if (v.status == VerdictStatus::NotVci) CHECK(r.outcome != SearchOutcome::Found);
        if (r.outcome == SearchOutcome::Found) CHECK(v.status == VerdictStatus::Vci);
        if (r.outcome == SearchOutcome::Exhausted) CHECK(v.status == VerdictStatus::NotVci);
    }
}
