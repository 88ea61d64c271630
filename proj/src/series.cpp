#include "intdef/series.hpp"

#include <algorithm>

namespace intdef {

LaurentSeries::LaurentSeries(const DiffPolynomial& c) {
    if (!c.isZero()) coeffs_[0] = c;
}

LaurentSeries LaurentSeries::exactPoly(std::map<int, DiffPolynomial> coeffs) {
    LaurentSeries s;
    s.coeffs_ = std::move(coeffs);
    s.prune();
    return s;
}

LaurentSeries LaurentSeries::truncated(std::map<int, DiffPolynomial> coeffs, int truncOrder, Parity parity) {
    LaurentSeries s;
    s.coeffs_ = std::move(coeffs);
    s.trunc_ = truncOrder;
    s.parity_ = parity;
    s.prune();
    if (parity == Parity::odd)
        for (auto& [e, c] : s.coeffs_)
            if (e % 2 == 0) throw ParityMismatch("even exponent " + std::to_string(e) + " in odd series");
    return s;
}

LaurentSeries LaurentSeries::monomial(int exponent, const DiffPolynomial& c) { return exactPoly({{exponent, c}}); }

void LaurentSeries::prune() {
    for (auto it = coeffs_.begin(); it != coeffs_.end();) {
        if (it->second.isZero() || (trunc_ && it->first < -*trunc_))
            it = coeffs_.erase(it);
        else
            ++it;
    }
}

DiffPolynomial LaurentSeries::coeff(int exponent) const {
    if (exponent < lowestKnown())
        throw OrderUnavailable("coefficient of lambda^" + std::to_string(exponent) + " beyond truncation order " +
                               std::to_string(*trunc_));
    auto it = coeffs_.find(exponent);
    return it == coeffs_.end() ? DiffPolynomial() : it->second;
}

std::optional<int> LaurentSeries::maxExponent() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.rbegin()->first;
}

std::optional<int> LaurentSeries::minExponent() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.begin()->first;
}

LaurentSeries LaurentSeries::truncatedTo(int order) const {
    LaurentSeries s = *this;
    s.trunc_ = std::min(order, truncOrder());
    s.prune();
    return s;
}

LaurentSeries LaurentSeries::mapCoeffs(const std::function<DiffPolynomial(const DiffPolynomial&)>& f) const {
    LaurentSeries s = *this;
    for (auto& [e, c] : s.coeffs_) c = f(c);
    s.prune();
    return s;
}

LaurentSeries LaurentSeries::scaled(const DiffPolynomial& c) const {
    return mapCoeffs([&](const DiffPolynomial& x) { return x * c; });
}

LaurentSeries LaurentSeries::operator-() const {
    return mapCoeffs([](const DiffPolynomial& x) { return -x; });
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
    LaurentSeries s;
    s.coeffs_ = a.coeffs_;
    for (auto& [e, c] : b.coeffs_) s.coeffs_[e] += c;
    if (!a.exact() || !b.exact()) s.trunc_ = std::min(a.truncOrder(), b.truncOrder());
    s.parity_ = a.parity_ == b.parity_ ? a.parity_ : Parity::any;
    s.prune();
    return s;
}

LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return a + (-b); }

namespace {

// Lowest exponent known in the product of a and b; INT_MIN when exact.
long long productLowest(const LaurentSeries& a, const LaurentSeries& b) {
    long long lo = INT_MIN;
    auto top = [](const LaurentSeries& s) -> long long {
        auto m = s.maxExponent();
        return m ? *m : static_cast<long long>(s.lowestKnown()) - 1;
    };
    if (!a.exact()) lo = std::max(lo, static_cast<long long>(a.lowestKnown()) + top(b));
    if (!b.exact()) lo = std::max(lo, static_cast<long long>(b.lowestKnown()) + top(a));
    return lo;
}

}  // namespace

LaurentSeries mulTruncated(const LaurentSeries& a, const LaurentSeries& b, int order) {
    long long lo = std::max<long long>(productLowest(a, b), -static_cast<long long>(order));
    std::map<int, DiffPolynomial> c;
    for (auto& [ea, ca] : a.coeffs())
        for (auto& [eb, cb] : b.coeffs()) {
            int e = ea + eb;
            if (e < lo) continue;
            c[e] += ca * cb;
        }
    bool exact = a.exact() && b.exact() && order == INT_MAX;
    if (exact) return LaurentSeries::exactPoly(std::move(c));
    int t = lo <= INT_MIN ? INT_MAX : static_cast<int>(std::min<long long>(-lo, INT_MAX));
    return LaurentSeries::truncated(std::move(c), t);
}

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) { return mulTruncated(a, b, INT_MAX); }

std::string LaurentSeries::str() const {
    std::string s;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        if (!s.empty()) s += " + ";
        s += "lambda^{" + std::to_string(it->first) + "} * (" + it->second.str() + ")";
    }
    if (s.empty()) s = "0";
    if (trunc_) s += " + O(lambda^{" + std::to_string(-*trunc_ - 1) + "})";
    return s;
}

nlohmann::json LaurentSeries::toJson() const {
    nlohmann::json c = nlohmann::json::array();
    for (auto& [e, p] : coeffs_) c.push_back({{"exponent", e}, {"coeff", p.str()}});
    nlohmann::json j = {{"coeffs", c}, {"exact", exact()}};
    if (trunc_) j["truncOrder"] = *trunc_;
    if (parity_ == Parity::odd) j["parity"] = "odd";
    return j;
}

LaurentSeries LaurentSeries::fromJson(const nlohmann::json& j) {
    std::map<int, DiffPolynomial> c;
    for (auto& x : j.at("coeffs")) c[x.at("exponent").get<int>()] = DiffPolynomial::parse(x.at("coeff").get<std::string>());
    if (j.at("exact").get<bool>()) return exactPoly(std::move(c));
    Parity p = j.contains("parity") && j["parity"] == "odd" ? Parity::odd : Parity::any;
    return truncated(std::move(c), j.at("truncOrder").get<int>(), p);
}

LaurentSeries reciprocal(const LaurentSeries& s, int order) {
    auto top = s.maxExponent();
    if (!top) throw SingularLeadingTerm("reciprocal of zero series");
    auto lead = s.coeff(*top).numericConstant();
    if (!lead || lead->isZero()) throw SingularLeadingTerm("leading coefficient " + s.coeff(*top).str() + " not invertible");
    // s = c lambda^m (1 + X)
    DiffPolynomial cinv(lead->inverse());
    LaurentSeries x = s.scaled(cinv) * LaurentSeries::monomial(-*top, DiffPolynomial(1)) - LaurentSeries(DiffPolynomial(1));
    int inner = order == INT_MAX ? order : order - *top;  // exponents of 1/(1+X) needed
    if (s.exact() && inner == INT_MAX) throw std::invalid_argument("reciprocal of an exact series needs a finite order");
    inner = std::min(inner, x.truncOrder());
    LaurentSeries sum(DiffPolynomial(1)), power(DiffPolynomial(1));
    sum = sum.truncatedTo(inner);
    LaurentSeries negx = -x;
    for (int k = 1; k <= inner; ++k) {
        power = mulTruncated(power, negx, inner);
        if (power.isZero()) break;
        sum = sum + power;
    }
    return mulTruncated(sum, LaurentSeries::monomial(-*top, cinv), order);
}

LaurentSeries seriesLog(const LaurentSeries& s, int order) {
    if (order < 1) throw std::invalid_argument("seriesLog order must be >= 1");
    auto top = s.maxExponent();
    if (!top || *top > 0 || s.coeff(0) != DiffPolynomial(1)) throw NotUnitSeries("constant term is not 1: " + s.str());
    int n = std::min(order, s.truncOrder());
    LaurentSeries x = (s - LaurentSeries(DiffPolynomial(1))).truncatedTo(n);
    LaurentSeries sum = LaurentSeries().truncatedTo(n), power(DiffPolynomial(1));
    for (int k = 1; k <= n; ++k) {
        power = mulTruncated(power, x, n);
        if (power.isZero()) break;
        Gaussian c(Rational(k % 2 ? 1 : -1, k));
        sum = sum + power.scaled(DiffPolynomial(c));
    }
    return sum.truncatedTo(n);
}

LaurentSeries seriesExp(const LaurentSeries& x, int order) {
    auto top = x.maxExponent();
    if (top && *top >= 0) throw NotUnitSeries("exponent series must have only negative powers");
    int n = std::min(order, x.truncOrder());
    LaurentSeries xs = x.truncatedTo(n);
    LaurentSeries sum = LaurentSeries(DiffPolynomial(1)).truncatedTo(n), power(DiffPolynomial(1));
    Rational fact(1);
    for (int k = 1; k <= n; ++k) {
        power = mulTruncated(power, xs, n);
        if (power.isZero()) break;
        fact *= Rational(k);
        sum = sum + power.scaled(DiffPolynomial(Gaussian(Rational(1) / fact)));
    }
    return sum.truncatedTo(n);
}

// --- matrices --------------------------------------------------------------

MatrixSeries::MatrixSeries(LaurentSeries a, LaurentSeries b, LaurentSeries c, LaurentSeries d)
    : e{std::move(a), std::move(b), std::move(c), std::move(d)} {
    equalizeTruncation();
}

MatrixSeries MatrixSeries::identity() {
    return MatrixSeries(LaurentSeries(DiffPolynomial(1)), {}, {}, LaurentSeries(DiffPolynomial(1)));
}

MatrixSeries MatrixSeries::sigma3() {
    return MatrixSeries(LaurentSeries(DiffPolynomial(1)), {}, {}, LaurentSeries(DiffPolynomial(-1)));
}

int MatrixSeries::truncOrder() const {
    int t = INT_MAX;
    for (auto& x : e) t = std::min(t, x.truncOrder());
    return t;
}

void MatrixSeries::equalizeTruncation() {
    int t = truncOrder();
    if (t == INT_MAX) return;
    for (auto& x : e) x = x.truncatedTo(t);
}

bool MatrixSeries::isZero() const {
    return std::all_of(e.begin(), e.end(), [](const LaurentSeries& s) { return s.isZero(); });
}

MatrixSeries MatrixSeries::mapEntries(const std::function<LaurentSeries(const LaurentSeries&)>& f) const {
    return MatrixSeries(f(e[0]), f(e[1]), f(e[2]), f(e[3]));
}

MatrixSeries MatrixSeries::scaled(const DiffPolynomial& c) const {
    return mapEntries([&](const LaurentSeries& s) { return s.scaled(c); });
}

MatrixSeries operator+(const MatrixSeries& a, const MatrixSeries& b) {
    return MatrixSeries(a.e[0] + b.e[0], a.e[1] + b.e[1], a.e[2] + b.e[2], a.e[3] + b.e[3]);
}

MatrixSeries operator-(const MatrixSeries& a, const MatrixSeries& b) {
    return MatrixSeries(a.e[0] - b.e[0], a.e[1] - b.e[1], a.e[2] - b.e[2], a.e[3] - b.e[3]);
}

MatrixSeries operator*(const MatrixSeries& a, const MatrixSeries& b) {
    return MatrixSeries(a(0, 0) * b(0, 0) + a(0, 1) * b(1, 0), a(0, 0) * b(0, 1) + a(0, 1) * b(1, 1),
                        a(1, 0) * b(0, 0) + a(1, 1) * b(1, 0), a(1, 0) * b(0, 1) + a(1, 1) * b(1, 1));
}

std::string MatrixSeries::str() const {
    return "[[" + e[0].str() + ", " + e[1].str() + "], [" + e[2].str() + ", " + e[3].str() + "]]";
}

nlohmann::json MatrixSeries::toJson() const {
    return nlohmann::json::array({e[0].toJson(), e[1].toJson(), e[2].toJson(), e[3].toJson()});
}

MatrixSeries MatrixSeries::fromJson(const nlohmann::json& j) {
    return MatrixSeries(LaurentSeries::fromJson(j.at(0)), LaurentSeries::fromJson(j.at(1)),
                        LaurentSeries::fromJson(j.at(2)), LaurentSeries::fromJson(j.at(3)));
}

LaurentSeries det(const MatrixSeries& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

MatrixSeries inverse(const MatrixSeries& m, int order) {
    LaurentSeries d = reciprocal(det(m), order);
    auto f = [&](const LaurentSeries& s) { return mulTruncated(s, d, order); };
    return MatrixSeries(f(m(1, 1)), f(-m(0, 1)), f(-m(1, 0)), f(m(0, 0)));
}

MatrixSeries commutator(const MatrixSeries& a, const MatrixSeries& b) { return a * b - b * a; }

}  // namespace intdef
