#include "doctest.h"

#include "intdef/models.hpp"

using namespace intdef;

TEST_SUITE("models") {

TEST_CASE("nine models, all zero curvature") {
    CHECK(builtinModels().size() == 9);
    for (auto& m : builtinModels()) {
        CAPTURE(m.id);
        CHECK(zeroCurvatureResidual(m).isZero());
        // Liouville has no zero-field vacuum: e^v survives in V
        if (m.name != ModelName::LiouvilleLC) CHECK(checkBoundaryBehaviour(m));
    }
}

TEST_CASE("V symmetry for the conjugation classes") {
    for (auto n : {ModelName::NLSfocusing, ModelName::NLSdefocusing, ModelName::mKdVplus, ModelName::KdVplus}) {
        auto& m = modelByName(n);
        CAPTURE(m.id);
        CHECK(checkVSymmetry(m));
    }
}

TEST_CASE("model JSON round-trip and tampering") {
    auto& m = modelByName(ModelName::NLSfocusing);
    ModelSpec back = modelFromJson(modelToJson(m));
    CHECK(back.V == m.V);
    CHECK(zeroCurvatureResidual(back).isZero());
    auto j = modelToJson(m);
    j["V"][0]["coeffs"][0]["coeff"] = "(-2i)*q*r";
    ModelSpec bad = modelFromJson(j);
    auto res = zeroCurvatureResidual(bad);
    CHECK_FALSE(res.isZero());
    CHECK_FALSE(res.e[0].coeff(0).isZero());
}

TEST_CASE("tilde map and reduction") {
    auto p = DiffPolynomial::parse("q*r_x");
    CHECK(tildeMap(p) == DiffPolynomial::parse("qt*rt_x"));
    // class II, eps = -1: r -> -q
    CHECK(applyReduction(ReductionClass::II, -1, p) == DiffPolynomial::parse("(-1)*q*q_x"));
    CHECK_THROWS(modelById("no-such-model"));
}

}
