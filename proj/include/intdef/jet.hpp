#pragma once
// Truncated bivariate Taylor arithmetic in (x, t).  c(i, j) holds
// d^i_x d^j_t f / (i! j!) at the expansion point; products drop every
// monomial with x-degree > NX or t-degree > NT.

#include <array>
#include <cmath>
#include <complex>

namespace intdef {

template <int NX, int NT>
struct Jet {
    using cplx = std::complex<double>;
    static constexpr int W = NT + 1;
    static constexpr int K = NX + NT;  // nilpotency bound of the non-constant part
    std::array<cplx, (NX + 1) * (NT + 1)> c{};

    Jet() = default;
    Jet(cplx v) { c[0] = v; }
    Jet(double v) { c[0] = v; }

    static Jet varX(double x0) {
        Jet j(x0);
        if constexpr (NX >= 1) j.at(1, 0) = 1.0;
        return j;
    }
    static Jet varT(double t0) {
        Jet j(t0);
        if constexpr (NT >= 1) j.at(0, 1) = 1.0;
        return j;
    }

    cplx& at(int i, int j) { return c[i * W + j]; }
    const cplx& at(int i, int j) const { return c[i * W + j]; }
    cplx value() const { return c[0]; }

    // d^i_x d^j_t at the expansion point
    cplx deriv(int i, int j = 0) const {
        double f = 1;
        for (int k = 2; k <= i; ++k) f *= k;
        for (int k = 2; k <= j; ++k) f *= k;
        return at(i, j) * f;
    }

    // D_x; the top x-order becomes unknown and is zeroed.
    Jet dx() const {
        Jet o;
        for (int i = 0; i < NX; ++i)
            for (int j = 0; j <= NT; ++j) o.at(i, j) = at(i + 1, j) * double(i + 1);
        return o;
    }

    Jet conj() const {
        Jet o;
        for (size_t k = 0; k < c.size(); ++k) o.c[k] = std::conj(c[k]);
        return o;
    }

    Jet& operator+=(const Jet& o) {
        for (size_t k = 0; k < c.size(); ++k) c[k] += o.c[k];
        return *this;
    }
    Jet& operator-=(const Jet& o) {
        for (size_t k = 0; k < c.size(); ++k) c[k] -= o.c[k];
        return *this;
    }
    Jet& operator*=(cplx s) {
        for (auto& x : c) x *= s;
        return *this;
    }
    friend Jet operator+(Jet a, const Jet& b) { return a += b; }
    friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
    friend Jet operator-(Jet a) { return a *= -1.0; }
    friend Jet operator*(Jet a, cplx s) { return a *= s; }
    friend Jet operator*(cplx s, Jet a) { return a *= s; }
    friend Jet operator*(Jet a, double s) { return a *= s; }
    friend Jet operator*(double s, Jet a) { return a *= s; }
    friend Jet operator+(Jet a, double s) { a.c[0] += s; return a; }
    friend Jet operator+(double s, Jet a) { a.c[0] += s; return a; }
    friend Jet operator-(Jet a, double s) { a.c[0] -= s; return a; }
    friend Jet operator-(double s, Jet a) { return -a + s; }
    friend Jet operator/(Jet a, double s) { return a *= 1.0 / s; }

    friend Jet operator*(const Jet& a, const Jet& b) {
        Jet o;
        for (int i1 = 0; i1 <= NX; ++i1)
            for (int j1 = 0; j1 <= NT; ++j1) {
                cplx x = a.at(i1, j1);
                if (x == cplx(0)) continue;
                for (int i2 = 0; i1 + i2 <= NX; ++i2)
                    for (int j2 = 0; j1 + j2 <= NT; ++j2) o.at(i1 + i2, j1 + j2) += x * b.at(i2, j2);
            }
        return o;
    }
    friend Jet operator/(const Jet& a, const Jet& b) { return a * recip(b); }
    friend Jet operator/(double s, const Jet& b) { return recip(b) * s; }

    // f(a) from the derivatives f^(k)(a0), k = 0..K.
    template <class D>
    static Jet compose(const Jet& a, D&& derivs) {
        std::array<cplx, K + 1> d;
        derivs(a.c[0], d);
        Jet e = a;
        e.c[0] = 0;
        // Horner in the nilpotent part
        Jet acc(d[K] / factorial(K));
        for (int k = K - 1; k >= 0; --k) {
            acc = acc * e;
            acc.c[0] += d[k] / factorial(k);
        }
        return acc;
    }
    static double factorial(int k) {
        double f = 1;
        for (int i = 2; i <= k; ++i) f *= i;
        return f;
    }

    friend Jet recip(const Jet& a) { return powc(a, -1.0); }
    friend Jet powc(const Jet& a, cplx p) {
        return compose(a, [p](cplx z, std::array<cplx, K + 1>& d) {
            cplx f = 1;
            for (int k = 0; k <= K; ++k) {
                d[k] = f * std::pow(z, p - double(k));
                f *= p - double(k);
            }
        });
    }
    friend Jet sqrt(const Jet& a) { return powc(a, 0.5); }
    friend Jet exp(const Jet& a) {
        return compose(a, [](cplx z, std::array<cplx, K + 1>& d) { d.fill(std::exp(z)); });
    }
    friend Jet log(const Jet& a) {
        return compose(a, [](cplx z, std::array<cplx, K + 1>& d) {
            d[0] = std::log(z);
            double f = 1;
            for (int k = 1; k <= K; ++k) {
                d[k] = f / std::pow(z, k);
                f *= -double(k);
            }
        });
    }
    friend Jet sin(const Jet& a) {
        return compose(a, [](cplx z, std::array<cplx, K + 1>& d) {
            cplx s = std::sin(z), co = std::cos(z);
            cplx cyc[4] = {s, co, -s, -co};
            for (int k = 0; k <= K; ++k) d[k] = cyc[k % 4];
        });
    }
    friend Jet cos(const Jet& a) {
        return compose(a, [](cplx z, std::array<cplx, K + 1>& d) {
            cplx s = std::sin(z), co = std::cos(z);
            cplx cyc[4] = {co, -s, -co, s};
            for (int k = 0; k <= K; ++k) d[k] = cyc[k % 4];
        });
    }
    friend Jet tan(const Jet& a) { return sin(a) / cos(a); }
    friend Jet atan(const Jet& a) {
        const cplx i(0, 1);
        return (log(1.0 - i * a) - log(1.0 + i * a)) * (0.5 * i);
    }
    // overflow-safe for real expansion points
    friend Jet sech(const Jet& a) {
        Jet s = a.c[0].real() >= 0 ? -a : a;
        Jet e = exp(s);
        return 2.0 * e / (1.0 + e * e);
    }
    friend Jet tanh(const Jet& a) {
        bool pos = a.c[0].real() >= 0;
        Jet e = exp(pos ? -2.0 * a : 2.0 * a);
        Jet t = (1.0 - e) / (1.0 + e);
        return pos ? t : -t;
    }
    friend Jet cosh(const Jet& a) { return (exp(a) + exp(-a)) * 0.5; }
};

// Widen or narrow the truncation.
template <int MX, int MT, int NX, int NT>
Jet<MX, MT> jetCast(const Jet<NX, NT>& a) {
    Jet<MX, MT> o;
    for (int i = 0; i <= std::min(MX, NX); ++i)
        for (int j = 0; j <= std::min(MT, NT); ++j) o.at(i, j) = a.at(i, j);
    return o;
}

using JetX = Jet<7, 0>;  // grid sampling: x-derivatives only
using JetT = Jet<5, 1>;  // pointwise checks: first t-derivatives as well
using JetL = Jet<1, 0>;  // transition matrices: values and one x-derivative

}  // namespace intdef
