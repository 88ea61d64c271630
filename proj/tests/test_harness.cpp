#include "doctest.h"

#include "intdef/harness.hpp"

using namespace intdef;

TEST_SUITE("harness") {

TEST_CASE("Simpson is exact on cubics for both interval parities") {
    double h = 0.1;
    for (int n : {10, 11, 1}) {
        std::vector<cplx> f;
        for (int i = 0; i <= n; ++i) {
            double x = i * h;
            f.push_back(n == 1 ? cplx(2 * x + 1) : cplx(x * x * x - x));
        }
        double L = n * h;
        double exact = n == 1 ? L * L + L : L * L * L * L / 4 - L * L / 2;
        CHECK(std::abs(simpson(f, 0, n, h) - exact) < 1e-13);
    }
}

TEST_CASE("defect must sit on a grid node") {
    auto s = makeScenario("sg-kink");
    s.defects[0].x0 = 0.005;
    CHECK_THROWS_AS(makeGrid(s, 0), InvalidParams);
}

TEST_CASE("single time sample gives one row per order") {
    auto s = makeScenario("sg-kink");
    s.times = {0.0};
    ChargeOptions o;
    o.maxOrder = 2;
    auto r = computeCharges(s, o);
    CHECK(r.rows.size() == 2);
    CHECK(r.drift.at(1) == 0.0);
}

TEST_CASE("truncated domain underflows") {
    auto s = makeScenario("sg-kink");
    s.xMin = -3;
    CHECK_THROWS_AS(computeCharges(s), QuadratureUnderflow);
}

TEST_CASE("sine-Gordon charges with the defect") {
    auto s = makeScenario("sg-kink");
    auto r = computeCharges(s);
    for (int n : {1, 2, 3}) CHECK(r.drift.at(n) < 1e-6);
    // order 2 collapses to the constant -alpha^2/8
    CHECK(std::abs(r.rows[s.times.size()].total - cplx(-0.125)) < 1e-8);
    CHECK(chargeReportCsv(r) == chargeReportCsv(computeCharges(s)));
}

TEST_CASE("float formatting") {
    CHECK(formatDouble(-0.0) == "0.0000000000000000e+00");
    CHECK(formatDouble(0.1) == "1.0000000000000001e-01");
}

TEST_CASE("transition matrix of the vacuum") {
    auto& m = modelByName(ModelName::NLSfocusing);
    auto bind = [](double, Bindings& b) {
        b.set(Base::q, 0, 0.0);
        b.set(Base::r, 0, 0.0);
    };
    cplx lam = 0.7;
    auto T = transitionMatrix(m, false, bind, 0.0, 2.0, lam, 0.01);
    // vacuum: diagonal and unimodular
    CHECK(std::abs(matDet(T.T) - 1.0) < 1e-12);
    CHECK(std::abs(T.T[1]) < 1e-14);
}

}
