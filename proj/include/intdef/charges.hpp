#pragma once
// The charge hierarchy: Riccati expansions, bulk densities and fluxes,
// defect contributions -ln(L11 + L12 Gamma), class I symmetrization and the
// Liouville boundary series.

#include <optional>
#include <vector>

#include "intdef/defects.hpp"

namespace intdef {

// AKNS: Gamma_1..Gamma_N (index 0 holds Gamma_1).  KN: Gamma_0..Gamma_N.
std::vector<DiffPolynomial> gammaExpandAKNS(const ModelSpec& m, int N);
std::vector<DiffPolynomial> gammaExpandKN(const ModelSpec& m, int N);

// Gamma as a series in lambda with the (2i)^n factors absorbed.
// AKNS: sum_n Gamma_n/(2i lambda)^n, known down to lambda^{-N}.
// KN: sum_n Gamma_n/(2i lambda)^{2n+1}, odd parity, known down to lambda^{-(2N+2)}.
LaurentSeries gammaSeries(const ModelSpec& m, int N, bool tilde = false);
// Internal coefficient of lambda^{-e} divided by the recursion's Gamma_n.
Gaussian gammaNormalization(const ModelSpec& m, int n);

enum class RiccatiKind { x, t };
// Residual series through the known range.  For the t equation, useEom=false
// drops the time derivative of Gamma (no equation of motion available).
LaurentSeries riccatiResidual(const ModelSpec& m, const LaurentSeries& gamma, RiccatiKind which, bool useEom = true);

constexpr int kMaxChargeOrder = 10;

// Density and flux of order n in the internal normalization:
// AKNS: [lambda^{-n}] of q Gamma and B Gamma + A.
// KN:   [lambda^{-2n}] of lambda q Gamma and B Gamma + A  (n >= 0).
DiffPolynomial bulkDensity(const ModelSpec& m, int n);
DiffPolynomial bulkFlux(const ModelSpec& m, int n);
// D_t(density) - D_x(flux) through the equations of motion; zero when the
// law holds.  Light-cone models are reduced first.
DiffPolynomial verifyBulkConservation(const ModelSpec& m, int n);

// Coefficients of -ln(L11 + L12 Gamma) at lambda^{-1..-N} (index 0 = order 1),
// generic generators, Omega-bearing.
std::vector<DiffPolynomial> defectExpansion(const ModelSpec& m, const MatrixSeries& L, int N);
std::vector<DiffPolynomial> defectExpansion(const ModelSpec& m, const DefectSpec& d, int N);

// i (c - c*) with the conjugation of reductionConjugate.
DiffPolynomial symmetrizeCoefficient(const DiffPolynomial& c, int epsilon);

struct ChargeSeries {
    int order = 1;
    DiffPolynomial bulkDensityRight;  // internal normalization, generic
    DiffPolynomial bulkDensityLeft;
    DiffPolynomial flux;
    DiffPolynomial defectTerm;
    Gaussian normalization{1};        // kappa_n: displayed = kappa_n * internal (mod D_x)
};
ChargeSeries chargeSeries(const ModelSpec& m, const DefectSpec& d, int n);

struct SymmetrizedCharge {
    ChargeSeries base;
    DiffPolynomial densityRight, densityLeft, defectTerm;  // symmetrized
};
SymmetrizedCharge symmetrize(const ModelSpec& m, const ChargeSeries& cs);

// Coefficients of ln(1 - Gamma) at lambda^{-1..-N}, generic (q, r).
std::vector<DiffPolynomial> liouvilleLogSeries(int N);
// Per-order correction  ln(1-Gamma)_n |_{right edge} - ln(1-Gamma~)_n |_{left edge}
// in the internal normalization.  `rightEdge` binds q, r; `leftEdge` binds q~, r~.
std::vector<cplx> liouvilleBoundaryTerms(const ModelSpec& m, const Bindings& rightEdge, const Bindings& leftEdge, int N);

}  // namespace intdef
