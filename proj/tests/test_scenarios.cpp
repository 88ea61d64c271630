#include "doctest.h"

#include "intdef/harness.hpp"

using namespace intdef;

TEST_SUITE("scenarios") {

TEST_CASE("jets differentiate exactly") {
    auto x = JetX::varX(0.3);
    auto f = sin(x) * exp(x);
    // d/dx (sin x e^x) = e^x (sin x + cos x)
    CHECK(std::abs(f.deriv(1) - std::exp(0.3) * (std::sin(0.3) + std::cos(0.3))) < 1e-14);
    CHECK(std::abs(f.deriv(2) - 2.0 * std::exp(0.3) * std::cos(0.3)) < 1e-13);
    auto a = atan(x);
    CHECK(std::abs(a.deriv(1) - 1.0 / (1 + 0.09)) < 1e-14);
    auto big = sech(JetX::varX(800.0));
    CHECK(std::isfinite(std::abs(big.value())));
}

TEST_CASE("every built-in scenario is an exact pair") {
    for (auto& s : builtinScenarios()) {
        CAPTURE(s.name);
        BacklundCheck b = checkScenario(s);
        CHECK(b.maxPde < 1e-10);
        CHECK(b.maxX < 1e-8);
        CHECK(b.maxT < 1e-8);
        CHECK(admitScenario(s));
    }
}

TEST_CASE("scenario overrides") {
    auto s = makeScenario("sg-kink", {{"alpha", 1.5}});
    CHECK(s.defect().betaOrAlpha == doctest::Approx(1.5));
    CHECK(admitScenario(s));
    CHECK_THROWS_AS(makeScenario("sg-kink", {{"nope", 1}}), ConfigError);
    CHECK_THROWS_AS(makeScenario("unknown"), ConfigError);
}

TEST_CASE("x-part integration regenerates the kink") {
    auto s = makeScenario("sg-kink");
    double t = 0.5;
    Bindings b0;
    bindRegion(s, 0, s.xMin, t, true, b0);
    auto sol = backlundSolveX(s.modelSpec(), s.defect(), s.regions[1], t, s.xMin, 0.0, 0.01,
                              std::pair{b0.get(FieldSymbol{Base::qt, 0}), b0.get(FieldSymbol{Base::rt, 0})});
    Bindings b1;
    bindRegion(s, 0, 0.0, t, true, b1);
    CHECK(std::abs(sol.Q.back() - b1.get(FieldSymbol{Base::qt, 0})) < 1e-6);
}

TEST_CASE("trivial seed stays at the fixed point") {
    auto s = makeScenario("nls-vacuum");
    auto sol = backlundSolveX(s.modelSpec(), s.defect(), zeroField(), 0.0, -5, 5, 0.01);
    for (auto& q : sol.Q) CHECK(std::abs(q) < 1e-12);
}

}
