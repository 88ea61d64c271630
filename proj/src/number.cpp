#include "intdef/number.hpp"

#include <numeric>

namespace intdef {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

long long narrow(__int128 v) {
    if (v > INT64_MAX || v < -INT64_MAX)
        throw std::overflow_error("rational coefficient overflow");
    return static_cast<long long>(v);
}

}  // namespace

Rational::Rational(long long n, long long d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    *this = fromWide(n, d);
}

Rational Rational::fromWide(__int128 n, __int128 d) {
    if (d < 0) {
        n = -n;
        d = -d;
    }
    __int128 g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    Rational r;
    r.num_ = narrow(n);
    r.den_ = narrow(n == 0 ? 1 : d);
    return r;
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    if (den_ == o.den_) return *this = fromWide(__int128(num_) + o.num_, den_);
    return *this = fromWide(__int128(num_) * o.den_ + __int128(o.num_) * den_, __int128(den_) * o.den_);
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
    return *this = fromWide(__int128(num_) * o.num_, __int128(den_) * o.den_);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.num_ == 0) throw std::domain_error("rational division by zero");
    return *this = fromWide(__int128(num_) * o.den_, __int128(den_) * o.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return __int128(a.num_) * b.den_ <=> __int128(b.num_) * a.den_;
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(const std::string& s) {
    auto slash = s.find('/');
    std::size_t used = 0;
    if (slash == std::string::npos) {
        long long n = std::stoll(s, &used);
        if (used != s.size()) throw std::invalid_argument("bad rational: " + s);
        return Rational(n);
    }
    std::string a = s.substr(0, slash), b = s.substr(slash + 1);
    long long n = std::stoll(a, &used);
    if (used != a.size()) throw std::invalid_argument("bad rational: " + s);
    long long d = std::stoll(b, &used);
    if (used != b.size()) throw std::invalid_argument("bad rational: " + s);
    return Rational(n, d);
}

Gaussian& Gaussian::operator*=(const Gaussian& o) {
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational i = re_ * o.im_ + im_ * o.re_;
    re_ = r;
    im_ = i;
    return *this;
}

Gaussian Gaussian::inverse() const {
    Rational n = re_ * re_ + im_ * im_;
    if (n.isZero()) throw std::domain_error("inverse of zero coefficient");
    return Gaussian(re_ / n, -im_ / n);
}

std::string Gaussian::str() const {
    auto imag = [](const Rational& v) {
        if (v == Rational(1)) return std::string("i");
        if (v == Rational(-1)) return std::string("-i");
        return v.str() + "i";
    };
    if (im_.isZero()) return re_.str();
    if (re_.isZero()) return imag(im_);
    std::string s = re_.str();
    std::string t = imag(im_);
    if (t[0] != '-') s += "+";
    return s + t;
}

Gaussian Gaussian::parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty coefficient");
    if (s.back() != 'i') return Gaussian(Rational::parse(s));
    // split real/imag at the last sign that is not the leading one
    std::size_t cut = std::string::npos;
    for (std::size_t k = s.size() - 1; k > 0; --k)
        if (s[k] == '+' || s[k] == '-') {
            cut = k;
            break;
        }
    std::string re = cut == std::string::npos ? "" : s.substr(0, cut);
    std::string im = s.substr(cut == std::string::npos ? 0 : cut, s.size() - (cut == std::string::npos ? 0 : cut) - 1);
    if (!im.empty() && im[0] == '+') im.erase(0, 1);
    Rational imv = im.empty() ? Rational(1) : im == "-" ? Rational(-1) : Rational::parse(im);
    Rational rev = re.empty() ? Rational(0) : Rational::parse(re);
    return Gaussian(rev, imv);
}

Gaussian Gaussian::pow(Gaussian b, int n) {
    if (n < 0) {
        b = b.inverse();
        n = -n;
    }
    Gaussian r(1);
    while (n > 0) {
        if (n & 1) r *= b;
        b *= b;
        n >>= 1;
    }
    return r;
}

Gaussian Gaussian::twoIPow(int n) { return pow(Gaussian(Rational(0), Rational(2)), n); }

}  // namespace intdef
