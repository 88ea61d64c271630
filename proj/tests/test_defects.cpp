#include "doctest.h"

#include "intdef/defects.hpp"
#include "intdef/models.hpp"

using namespace intdef;

TEST_SUITE("defects") {

TEST_CASE("projector form is idempotent per class") {
    for (auto cls : {DefectClass::I, DefectClass::II, DefectClass::III}) {
        DefectSpec d;
        d.cls = cls;
        auto p = projectorDecompose(d);
        CHECK(p.idempotent);
    }
}

TEST_CASE("L times its inverse") {
    DefectSpec d;
    d.cls = DefectClass::I;
    d.alphaPlus = 0.3;
    d.betaOrAlpha = 1.2;
    d.epsilon = 1;
    Bindings b;
    bindDefectParams(d, b);
    b.set(Base::q, 0, {0.4, -0.2});
    b.set(Base::r, 0, double(d.epsilon) * std::conj(cplx{0.4, -0.2}));
    b.set(Base::qt, 0, {-0.1, 0.5});
    b.set(Base::rt, 0, double(d.epsilon) * std::conj(cplx{-0.1, 0.5}));
    for (cplx lam : {cplx{0.7, 0}, cplx{1.3, 0.2}, cplx{-2, 1}}) {
        Mat2 L = defectMatrixAt(d, b, lam);
        Mat2 Li = projectorInverse(d, b, lam);
        CHECK(matNorm(matSub(matMul(L, Li), matIdentity())) < 1e-12);
        CHECK(matNorm(matSub(Li, matInverse(L))) < 1e-12);
    }
}

TEST_CASE("parameter validation") {
    DefectSpec d;
    d.cls = DefectClass::II;
    d.betaOrAlpha = 0;
    CHECK_THROWS_AS(d.validate(), InvalidParams);
    d.cls = DefectClass::III;
    d.alphaPlus = 0.5;
    CHECK_THROWS_AS(d.validate(), InvalidParams);
    d.alphaPlus = 0;
    d.betaOrAlpha = 1;
    d.signBranch = 3;
    CHECK_THROWS_AS(d.validate(), InvalidParams);
    DefectSpec a, c;
    a.x0 = 0;
    c.x0 = 0;
    CHECK_THROWS_AS(composeDefects({a, c}), OverlappingDefects);
}

TEST_CASE("det L has no field dependence") {
    auto L = genericDefectMatrix(1);
    auto D = det(L);
    for (auto& [e, c] : D.coeffs()) {
        CAPTURE(e);
        CHECK(c.isConstant());
    }
}

}
