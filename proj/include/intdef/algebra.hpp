#pragma once
// Differential polynomials in q, r, q~, r~ and their x-derivatives, over the
// Gaussian rationals, extended by one square-root generator Omega with
// Omega^2 -> alpha_-^2 - (q~-q)(r~-r).
//
// The light-cone models also need cos v, sin v, e^v (and tilde copies) as
// generators: they are closed under D_x once u is fixed as -v_x/2 or v_x/2,
// so they live here as auxiliary bases with fixed differentiation rules.

#include <array>
#include <complex>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "intdef/errors.hpp"
#include "intdef/number.hpp"

namespace intdef {

enum class Base : std::uint8_t { q, r, qt, rt, cosv, sinv, cosvt, sinvt, expv, expvt };
constexpr int kBaseCount = 10;
constexpr int kMaxDeriv = 24;

bool isAux(Base b);
bool isTilde(Base b);
Base tildeOf(Base b);   // q -> qt, cosv -> cosvt, ...; tilde bases map to themselves
Base untildeOf(Base b);

struct FieldSymbol {
    Base base = Base::q;
    int order = 0;
    friend auto operator<=>(const FieldSymbol&, const FieldSymbol&) = default;
    std::string name() const;
};

enum class Param : std::uint8_t { alphaPlus, alphaMinus, beta, alpha, gamma };
constexpr int kParamCount = 5;
std::string paramName(Param p);

struct Monomial {
    std::vector<std::pair<FieldSymbol, int>> fields;  // sorted, powers > 0
    std::array<std::uint8_t, kParamCount> params{};
    std::uint8_t omega = 0;

    friend auto operator<=>(const Monomial&, const Monomial&) = default;
    bool isConstant() const;
    int fieldDegree() const;
    std::string str() const;  // "" for the unit monomial
};

struct Term {
    Monomial mono;
    Gaussian coeff;
    friend bool operator==(const Term&, const Term&) = default;
};

class DiffPolynomial;
const DiffPolynomial& defaultRadicand();

class DiffPolynomial {
public:
    DiffPolynomial() = default;
    DiffPolynomial(long long c);
    DiffPolynomial(const Gaussian& c);

    static DiffPolynomial field(FieldSymbol s);
    static DiffPolynomial field(Base b, int order = 0) { return field(FieldSymbol{b, order}); }
    static DiffPolynomial param(Param p, int power = 1);
    static DiffPolynomial omega();
    static DiffPolynomial fromTerms(std::vector<Term> terms);  // normalizes

    const std::vector<Term>& terms() const { return terms_; }
    bool isZero() const { return terms_.empty(); }
    bool hasOmega() const;
    bool hasAux() const;
    bool isConstant() const;  // no field generators and no Omega (params allowed)
    std::optional<Gaussian> numericConstant() const;  // pure number, no params
    int maxOrder(Base b) const;  // -1 if absent

    DiffPolynomial operator-() const;
    DiffPolynomial& operator+=(const DiffPolynomial& o);
    DiffPolynomial& operator-=(const DiffPolynomial& o);
    DiffPolynomial& operator*=(const DiffPolynomial& o) { return *this = mul(*this, o); }
    friend DiffPolynomial operator+(DiffPolynomial a, const DiffPolynomial& b) { return a += b; }
    friend DiffPolynomial operator-(DiffPolynomial a, const DiffPolynomial& b) { return a -= b; }
    friend DiffPolynomial operator*(const DiffPolynomial& a, const DiffPolynomial& b) { return mul(a, b); }
    friend bool operator==(const DiffPolynomial&, const DiffPolynomial&) = default;

    static DiffPolynomial mul(const DiffPolynomial& a, const DiffPolynomial& b,
                              const DiffPolynomial& radicand = defaultRadicand());
    DiffPolynomial scaled(const Gaussian& c) const;
    DiffPolynomial pow(int n) const;

    // Parts split by Omega power: *this = omegaFree() + Omega * omegaCoefficient().
    DiffPolynomial omegaFree() const;
    DiffPolynomial omegaCoefficient() const;

    std::string str() const;
    static DiffPolynomial parse(const std::string& text);
    nlohmann::json toJson() const;
    static DiffPolynomial fromJson(const nlohmann::json& j);

private:
    std::vector<Term> terms_;
};

// Ring homomorphism defined by images of generators.  A generator with no
// image (nullopt) is kept.  Products that produce Omega^2 use `radicand`.
struct Substitution {
    std::function<std::optional<DiffPolynomial>(FieldSymbol)> field;
    std::function<std::optional<DiffPolynomial>(Param)> param;
    std::optional<DiffPolynomial> omega;
    DiffPolynomial radicand = defaultRadicand();
};
DiffPolynomial substitute(const DiffPolynomial& p, const Substitution& s);

// Complex conjugation of the coefficients only.
DiffPolynomial conjugateCoefficients(const DiffPolynomial& p);

// Derivation given by its action on generators (Leibniz extension).
// Refuses Omega-bearing input.
DiffPolynomial derivation(const DiffPolynomial& p,
                          const std::function<DiffPolynomial(FieldSymbol)>& onField);

DiffPolynomial totalXDerivative(const DiffPolynomial& p);
DiffPolynomial totalXDerivative(const DiffPolynomial& p, int times);
DiffPolynomial fieldXDerivative(FieldSymbol s);  // D_x of a single generator
DiffPolynomial partialDerivative(const DiffPolynomial& p, FieldSymbol s);
DiffPolynomial partialDerivative(const DiffPolynomial& p, Param s);

// Euler operator along one field family: sum_k (-D_x)^k dP/du_(k).
DiffPolynomial eulerOperator(const DiffPolynomial& p, Base b);
// True when every Euler operator vanishes (P is D_x of something).
bool isTotalXDerivative(const DiffPolynomial& p);
// F with D_x F = P for a D_x-exact P without field-free terms.
DiffPolynomial integrateX(const DiffPolynomial& p);

// Numeric environment for evaluate().
struct Bindings {
    std::array<std::array<std::complex<double>, kMaxDeriv + 1>, kBaseCount> field{};
    std::array<std::array<bool, kMaxDeriv + 1>, kBaseCount> bound{};
    std::array<std::complex<double>, kParamCount> param{};
    std::array<bool, kParamCount> paramBound{};
    std::optional<std::complex<double>> omega;  // explicit value wins
    int omegaBranch = 1;
    // Time derivatives of q, r, q~, r~ (indexed by Base), used by the
    // t-residuals of the defect conditions only.
    std::array<std::complex<double>, 4> fieldT{};
    std::array<bool, 4> fieldTBound{};

    void set(FieldSymbol s, std::complex<double> v);
    void set(Base b, int order, std::complex<double> v) { set(FieldSymbol{b, order}, v); }
    void set(Param p, std::complex<double> v);
    std::complex<double> get(FieldSymbol s) const;
    std::complex<double> get(Param p) const;
    void setT(Base b, std::complex<double> v);
    std::complex<double> getT(Base b) const;
};

std::complex<double> evaluate(const DiffPolynomial& p, const Bindings& b);
// Omega value: explicit, else branch * principal sqrt of the default radicand.
std::complex<double> omegaValue(const Bindings& b);

}  // namespace intdef
