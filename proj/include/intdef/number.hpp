#pragma once
// Exact rationals and Gaussian rationals.  int64 storage; every product and
// sum goes through __int128 and is checked, so overflow throws instead of
// wrapping.

#include <complex>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace intdef {

class Rational {
public:
    Rational() = default;
    Rational(long long n) : num_(n), den_(1) {}
    Rational(long long n, long long d);

    long long num() const { return num_; }
    long long den() const { return den_; }
    bool isZero() const { return num_ == 0; }
    bool isOne() const { return num_ == 1 && den_ == 1; }
    double toDouble() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);
    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    std::string str() const;
    static Rational parse(const std::string& s);

private:
    static Rational fromWide(__int128 n, __int128 d);
    long long num_ = 0;
    long long den_ = 1;
};

// a + b i with rational a, b.
class Gaussian {
public:
    Gaussian() = default;
    Gaussian(long long n) : re_(n) {}
    Gaussian(Rational re, Rational im = Rational()) : re_(re), im_(im) {}
    static Gaussian I() { return Gaussian(Rational(0), Rational(1)); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }
    bool isZero() const { return re_.isZero() && im_.isZero(); }
    bool isOne() const { return re_.isOne() && im_.isZero(); }
    bool isReal() const { return im_.isZero(); }
    Gaussian conj() const { return Gaussian(re_, -im_); }
    Gaussian inverse() const;
    std::complex<double> toComplex() const { return {re_.toDouble(), im_.toDouble()}; }

    Gaussian operator-() const { return Gaussian(-re_, -im_); }
    Gaussian& operator+=(const Gaussian& o) { re_ += o.re_; im_ += o.im_; return *this; }
    Gaussian& operator-=(const Gaussian& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
    Gaussian& operator*=(const Gaussian& o);
    Gaussian& operator/=(const Gaussian& o) { return *this *= o.inverse(); }
    friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
    friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
    friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
    friend Gaussian operator/(Gaussian a, const Gaussian& b) { return a /= b; }
    friend bool operator==(const Gaussian&, const Gaussian&) = default;

    // "3", "-1/2", "2i", "-i", "1/2+3i", "-1-1/4i"
    std::string str() const;
    static Gaussian parse(const std::string& s);

    // (2i)^n for integer n, possibly negative.
    static Gaussian twoIPow(int n);
    static Gaussian pow(Gaussian b, int n);

private:
    Rational re_, im_;
};

}  // namespace intdef
