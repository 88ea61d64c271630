#pragma once
// N=1 defect (Backlund) matrices L = 1 + L1/lambda, their algebraic
// identities, and numeric residuals of the defect conditions.

#include <array>
#include <complex>
#include <optional>
#include <vector>

#include "intdef/models.hpp"

namespace intdef {

using cplx = std::complex<double>;
using Mat2 = std::array<cplx, 4>;  // row-major

Mat2 matMul(const Mat2& a, const Mat2& b);
Mat2 matAdd(const Mat2& a, const Mat2& b);
Mat2 matSub(const Mat2& a, const Mat2& b);
Mat2 matScale(const Mat2& a, cplx s);
Mat2 matInverse(const Mat2& a);
Mat2 matIdentity();
cplx matDet(const Mat2& a);
double matNorm(const Mat2& a);  // max-abs entry

enum class DefectClass { I, II, III };

struct DefectSpec {
    DefectClass cls = DefectClass::I;
    double alphaPlus = 0.0;
    double betaOrAlpha = 1.0;  // beta (I, III), alpha (II), gamma (Liouville)
    int signBranch = 1;
    int epsilon = 1;
    double x0 = 0.0;
    bool sigma3Twist = true;
    bool nilpotent = false;  // alpha_- = 0 (Liouville); betaOrAlpha is then gamma

    void validate() const;  // InvalidParams
    ReductionClass reductionClass() const;
};

// Generic matrix in q, r, q~, r~, alpha_+, alpha_-, Omega.
MatrixSeries genericDefectMatrix(int signBranch);
// Class reduction applied (class III twist per sigma3Twist).
MatrixSeries buildDefectMatrix(const DefectSpec& d);

// Numeric parameter bindings implied by a DefectSpec.
void bindDefectParams(const DefectSpec& d, Bindings& b);

// L1 and L(lambda) from generic bindings (q, r, q~, r~ values and Omega).
Mat2 defectL1(const DefectSpec& d, const Bindings& b);
Mat2 defectMatrixAt(const DefectSpec& d, const Bindings& b, cplx lambda);

// Residuals of L1_x = W~ L1 - L1 W entrywise: (a1, a2, a3, a4).
// Needs order-1 derivatives of q, r, q~, r~.
struct ConditionResidual {
    cplx a1, a2, a3, a4;
    double offDiagonal() const { return std::max(std::abs(a2), std::abs(a3)); }
    double diagonal() const { return std::max(std::abs(a1), std::abs(a4)); }
    double fullMax = 0.0;  // t-family: max over every lambda order and entry
};
ConditionResidual defectConditionResidualX(const ModelSpec& m, const DefectSpec& d, const Bindings& b);

// Residual of L_t = V~ L - L V at lambda^{-1} (entries) plus the maximum over
// all orders.  Needs time derivatives of q, r, q~, r~ in b.fieldT.
enum class VPolarity { automatic, positive, negative };
ConditionResidual defectConditionResidualT(const ModelSpec& m, const DefectSpec& d, const Bindings& b,
                                           VPolarity family = VPolarity::automatic);
VPolarity polarityOf(const ModelSpec& m);

// Omega value at x0: both roots are tried and the one with the smaller x
// residual wins; ties (radicand ~ 0 or degenerate fields) fall back to
// continuity with `previous`, then to signBranch times the principal root.
cplx chooseOmega(const ModelSpec& m, const DefectSpec& d, Bindings b, std::optional<cplx> previous);

double detConstancyWitness(const DefectSpec& d, const std::vector<Bindings>& samples, const std::vector<cplx>& lambdas);

struct ProjectorForm {
    std::array<DiffPolynomial, 4> N;  // L1 - alpha1; P = N / (alpha2 - alpha1)
    DiffPolynomial alpha1, alpha2;
    DiffPolynomial denominator;       // alpha2 - alpha1 = -alpha_-
    bool idempotent = false;          // N^2 == (alpha2 - alpha1) N exactly
};
ProjectorForm projectorDecompose(const DefectSpec& d);
// L^{-1}(lambda) = lambda/(lambda+alpha1) * (1 - (alpha2-alpha1)/(lambda+alpha2) P)
Mat2 projectorInverse(const DefectSpec& d, const Bindings& b, cplx lambda);

struct MultiDefectSpec {
    std::vector<DefectSpec> defects;  // x0 strictly increasing
};
MultiDefectSpec composeDefects(std::vector<DefectSpec> ds);

}  // namespace intdef
