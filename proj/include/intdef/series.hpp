#pragma once
// Truncated Laurent series in the spectral parameter with DiffPolynomial
// coefficients, and 2x2 matrices of them.

#include <array>
#include <climits>
#include <functional>
#include <map>
#include <optional>
#include <string>

#include "intdef/algebra.hpp"

namespace intdef {

enum class Parity { any, odd };

class LaurentSeries {
public:
    LaurentSeries() = default;  // exact zero
    LaurentSeries(const DiffPolynomial& c);  // exact constant
    static LaurentSeries exactPoly(std::map<int, DiffPolynomial> coeffs);
    // Known for all exponents >= -truncOrder.
    static LaurentSeries truncated(std::map<int, DiffPolynomial> coeffs, int truncOrder, Parity parity = Parity::any);
    static LaurentSeries monomial(int exponent, const DiffPolynomial& c);

    bool exact() const { return !trunc_; }
    int truncOrder() const { return trunc_ ? *trunc_ : INT_MAX; }
    int lowestKnown() const { return trunc_ ? -*trunc_ : INT_MIN; }
    Parity parity() const { return parity_; }
    const std::map<int, DiffPolynomial>& coeffs() const { return coeffs_; }
    // Zero for unstored exponents; throws OrderUnavailable below the known range.
    DiffPolynomial coeff(int exponent) const;
    bool isZero() const { return coeffs_.empty(); }
    std::optional<int> maxExponent() const;
    std::optional<int> minExponent() const;

    LaurentSeries truncatedTo(int order) const;  // drop exponents < -order
    LaurentSeries mapCoeffs(const std::function<DiffPolynomial(const DiffPolynomial&)>& f) const;
    LaurentSeries scaled(const DiffPolynomial& c) const;

    LaurentSeries operator-() const;
    friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
    friend bool operator==(const LaurentSeries&, const LaurentSeries&) = default;

    // "lambda^{e} * (poly)" per stored coefficient, highest exponent first.
    std::string str() const;
    nlohmann::json toJson() const;
    static LaurentSeries fromJson(const nlohmann::json& j);

private:
    void prune();
    std::map<int, DiffPolynomial> coeffs_;
    std::optional<int> trunc_;
    Parity parity_ = Parity::any;
};

// Product keeping only exponents >= -order (cheaper than truncating after).
LaurentSeries mulTruncated(const LaurentSeries& a, const LaurentSeries& b, int order);
// 1/s for s whose leading coefficient is a nonzero number.
LaurentSeries reciprocal(const LaurentSeries& s, int order);
// ln s for s = 1 + (negative powers).
LaurentSeries seriesLog(const LaurentSeries& s, int order);
// exp X for X with only negative powers.
LaurentSeries seriesExp(const LaurentSeries& x, int order);

struct MatrixSeries {
    std::array<LaurentSeries, 4> e;  // row-major 11, 12, 21, 22

    MatrixSeries() = default;
    MatrixSeries(LaurentSeries a, LaurentSeries b, LaurentSeries c, LaurentSeries d);
    static MatrixSeries identity();
    static MatrixSeries sigma3();

    LaurentSeries& operator()(int i, int j) { return e[2 * i + j]; }
    const LaurentSeries& operator()(int i, int j) const { return e[2 * i + j]; }

    int truncOrder() const;
    bool isZero() const;
    MatrixSeries mapEntries(const std::function<LaurentSeries(const LaurentSeries&)>& f) const;
    MatrixSeries scaled(const DiffPolynomial& c) const;

    friend MatrixSeries operator+(const MatrixSeries& a, const MatrixSeries& b);
    friend MatrixSeries operator-(const MatrixSeries& a, const MatrixSeries& b);
    friend MatrixSeries operator*(const MatrixSeries& a, const MatrixSeries& b);
    friend bool operator==(const MatrixSeries&, const MatrixSeries&) = default;

    std::string str() const;
    nlohmann::json toJson() const;
    static MatrixSeries fromJson(const nlohmann::json& j);

private:
    void equalizeTruncation();
};

LaurentSeries det(const MatrixSeries& m);
MatrixSeries inverse(const MatrixSeries& m, int order);
MatrixSeries commutator(const MatrixSeries& a, const MatrixSeries& b);

}  // namespace intdef
