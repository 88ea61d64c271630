#include "doctest.h"

#include "intdef/series.hpp"

using namespace intdef;

TEST_SUITE("series") {

TEST_CASE("reciprocal, log and exp invert each other") {
    auto q = DiffPolynomial::field(Base::q);
    auto s = LaurentSeries::exactPoly({{0, 1}, {-1, q}, {-2, q * q}});
    auto inv = reciprocal(s, 6);
    auto one = mulTruncated(s, inv, 6);
    CHECK(one.coeff(0) == DiffPolynomial(1));
    for (int e = -6; e < 0; ++e) CHECK(one.coeff(e).isZero());
    auto back = seriesExp(seriesLog(s, 6), 6);
    for (int e = -6; e <= 0; ++e) CHECK(back.coeff(e) == s.coeff(e));
}

TEST_CASE("truncation is tracked") {
    auto a = LaurentSeries::truncated({{0, 1}, {-1, 2}}, 2);
    CHECK(a.truncOrder() == 2);
    CHECK_THROWS_AS(a.coeff(-3), OrderUnavailable);
    auto b = a * LaurentSeries::monomial(-1, 1);
    CHECK(b.truncOrder() == 3);
    CHECK_THROWS_AS(seriesLog(LaurentSeries::exactPoly({{0, 2}}), 3), NotUnitSeries);
}

TEST_CASE("matrix inverse and determinant") {
    auto q = DiffPolynomial::field(Base::q);
    auto r = DiffPolynomial::field(Base::r);
    MatrixSeries L(LaurentSeries::exactPoly({{0, 1}, {-1, q}}), LaurentSeries::monomial(-1, q),
                   LaurentSeries::monomial(-1, r), LaurentSeries::exactPoly({{0, 1}}));
    auto Li = inverse(L, 5);
    auto I = L * Li;
    for (int k = 0; k < 4; ++k)
        for (int e = -5; e <= 0; ++e) CHECK(I.e[k].coeff(e) == ((k == 0 || k == 3) && e == 0 ? DiffPolynomial(1) : DiffPolynomial()));
    CHECK(det(L).coeff(-2) == -(q * r));
    CHECK(MatrixSeries::fromJson(L.toJson()) == L);
}

}
