#include "doctest.h"

#include "intdef/algebra.hpp"

using namespace intdef;

TEST_SUITE("algebra") {

TEST_CASE("rational and gaussian arithmetic stays reduced") {
    CHECK(Rational(6, -4) == Rational(-3, 2));
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    Gaussian z = Gaussian::parse("1/2+3i");
    CHECK(z.re() == Rational(1, 2));
    CHECK(z.im() == Rational(3));
    CHECK((z * z.inverse()).isOne());
    CHECK(Gaussian::twoIPow(2) == Gaussian(-4));
    CHECK(Gaussian::twoIPow(-1) == Gaussian(Rational(0), Rational(-1, 2)));
    CHECK(Gaussian::parse("-i") == -Gaussian::I());
    CHECK(Gaussian::parse(Gaussian::parse("-1-1/4i").str()) == Gaussian::parse("-1-1/4i"));
}

TEST_CASE("text form round-trips") {
    auto p = DiffPolynomial::parse("(1/2i)*q*r + (-3)*q_xx*r^2 + (2)*alpha_plus*Omega");
    CHECK(DiffPolynomial::parse(p.str()) == p);
    CHECK(DiffPolynomial::fromJson(p.toJson()) == p);
    CHECK_THROWS_AS(DiffPolynomial::parse("(1/2*q"), ParseError);
    CHECK_THROWS_AS(DiffPolynomial::parse("q_y"), ParseError);
}

TEST_CASE("total derivative and Euler operator") {
    auto q = DiffPolynomial::field(Base::q);
    auto r = DiffPolynomial::field(Base::r);
    auto p = q * r;
    CHECK(totalXDerivative(p) == DiffPolynomial::parse("q_x*r + q*r_x"));
    // D_x of anything is in the kernel of every Euler operator
    auto dp = totalXDerivative(q.pow(3) * DiffPolynomial::field(Base::r, 2));
    CHECK(isTotalXDerivative(dp));
    CHECK(totalXDerivative(integrateX(dp)) == dp);
    CHECK_FALSE(isTotalXDerivative(p));
    CHECK(eulerOperator(p, Base::q) == r);
}

TEST_CASE("Omega squares to the radicand") {
    auto w = DiffPolynomial::omega();
    CHECK(w * w == defaultRadicand());
    CHECK((w * w * w).omegaCoefficient() == defaultRadicand());
    CHECK_THROWS_AS(totalXDerivative(w), OmegaNotDifferentiable);
}

TEST_CASE("numeric evaluation") {
    Bindings b;
    b.set(Base::q, 0, {1.0, 2.0});
    b.set(Base::r, 1, 3.0);
    b.set(Param::alphaPlus, 0.5);
    auto p = DiffPolynomial::parse("(i)*q*r_x + (2)*alpha_plus");
    auto v = evaluate(p, b);
    CHECK(v.real() == doctest::Approx(-6.0 + 1.0));
    CHECK(v.imag() == doctest::Approx(3.0));
    CHECK_THROWS_AS(evaluate(DiffPolynomial::field(Base::qt), b), UnboundSymbol);
}

}
