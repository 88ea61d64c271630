#include "doctest.h"

#include <fstream>
#include <sstream>

#include "intdef/charges.hpp"
#include "intdef/displays.hpp"

using namespace intdef;

namespace {

// "Gamma_n = poly" lines from the sympy oracle
std::vector<DiffPolynomial> readGolden(const std::string& name) {
    std::ifstream in(std::string(INTDEF_TEST_DATA) + "/golden/" + name);
    REQUIRE(in);
    std::vector<DiffPolynomial> out;
    std::string line;
    while (std::getline(in, line)) {
        auto eq = line.find(" = ");
        if (eq == std::string::npos) continue;
        out.push_back(DiffPolynomial::parse(line.substr(eq + 3)));
    }
    return out;
}

}  // namespace

TEST_SUITE("charges") {

TEST_CASE("AKNS Gamma against the oracle") {
    auto golden = readGolden("akns_gamma.txt");
    REQUIRE(golden.size() == 6);
    auto g = gammaExpandAKNS(modelByName(ModelName::NLSfocusing), 6);
    for (int n = 0; n < 6; ++n) {
        CAPTURE(n + 1);
        CHECK(g[n] == golden[n]);
    }
}

TEST_CASE("KN Gamma against the oracle") {
    auto golden = readGolden("kn_gamma.txt");
    REQUIRE(golden.size() == 5);
    auto g = gammaExpandKN(modelByName(ModelName::DNLS), 4);
    for (int n = 0; n <= 4; ++n) {
        CAPTURE(n);
        CHECK(g[n] == golden[n]);
    }
}

TEST_CASE("Riccati residuals vanish") {
    for (auto& m : builtinModels()) {
        CAPTURE(m.id);
        auto G = gammaSeries(m, 5);
        CHECK(riccatiResidual(m, G, RiccatiKind::x).isZero());
        CHECK(riccatiResidual(m, G, RiccatiKind::t).isZero());
    }
}

TEST_CASE("bulk conservation") {
    for (auto& m : builtinModels()) {
        int hi = m.scheme == Scheme::AKNS ? 4 : 3;
        for (int n = m.scheme == Scheme::AKNS ? 1 : 0; n <= hi; ++n) {
            CAPTURE(m.id);
            CAPTURE(n);
            CHECK(verifyBulkConservation(m, n).isZero());
        }
    }
    CHECK_THROWS_AS(bulkDensity(modelByName(ModelName::NLSfocusing), kMaxChargeOrder + 1), OrderUnavailable);
}

TEST_CASE("first defect term is the Omega coefficient") {
    auto& m = modelByName(ModelName::NLSfocusing);
    auto d = defectExpansion(m, genericDefectMatrix(1), 1);
    CHECK(d[0] == DiffPolynomial::parse("(-1/2)*Omega + (-1/2)*alpha_plus"));
}

TEST_CASE("symmetrization is class I only") {
    DefectSpec d;
    d.cls = DefectClass::II;
    auto& m = modelByName(ModelName::sineGordonLC);
    auto cs = chargeSeries(m, d, 1);
    CHECK_THROWS_AS(symmetrize(m, cs), WrongClass);
    Bindings b;
    CHECK_THROWS_AS(liouvilleBoundaryTerms(m, b, b, 2), WrongModel);
}

TEST_CASE("displays match on both sheets") {
    for (auto& D : referenceDisplays()) {
        for (int s : {1, -1}) {
            if (D.model == ModelName::LiouvilleLC && s == -1) continue;
            CAPTURE(modelByName(D.model).id);
            CAPTURE(D.order);
            CAPTURE(s);
            auto r = matchDisplay(D, s);
            CHECK_MESSAGE(r.ok, r.detail);
        }
    }
    CHECK(displayNormalization(ModelName::NLSfocusing, 2) == Gaussian(-4));
    CHECK(displayNormalization(ModelName::mKdVplus, 1) == Gaussian(Rational(0), Rational(-2)));
}

}
