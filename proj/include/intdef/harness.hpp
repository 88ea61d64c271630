#pragma once
// Numeric verification on scenarios: charge quadrature with the defect term,
// transition matrices and the defect-dressed monodromy.

#include <map>
#include <string>
#include <vector>

#include "intdef/displays.hpp"
#include "intdef/scenarios.hpp"

namespace intdef {

struct GridState {
    std::vector<double> xs;
    std::vector<int> defectIndex;  // node of each x0
    double h = 0, t = 0;
};
// Uniform grid over [xMin, xMax]; every x0 must be a node (InvalidParams).
GridState makeGrid(const Scenario& s, double t);

// Composite Simpson on nodes [i0, i1] (3/8 rule on the last three intervals
// when the count is odd, trapezoid for a single interval).
cplx simpson(const std::vector<cplx>& f, int i0, int i1, double h);

struct ChargeOptions {
    int maxOrder = 3;
    bool symmetrize = true;         // class I only
    bool normalize = true;          // multiply by the display normalization kappa_n
    double edgeTolerance = 1e-8;    // QuadratureUnderflow threshold
};

struct ChargeRow {
    int order = 1;
    double t = 0;
    std::vector<cplx> bulk;    // one per region, left to right
    std::vector<cplx> defect;  // one per defect
    cplx boundary = 0;         // Liouville edge terms
    cplx total = 0;
    cplx bulkSum() const;
    cplx defectSum() const;
};

struct ChargeReport {
    std::string model, scenario;
    int regions = 2;
    std::vector<ChargeRow> rows;        // ordered by (order, t)
    std::map<int, double> drift;        // max |total(t) - total(t0)| / max(1, |total(t0)|)
    std::map<int, Gaussian> kappa;
};

ChargeReport computeCharges(const Scenario& s, const ChargeOptions& opt = {});

struct TransitionResult {
    Mat2 T{};
    double errorEstimate = 0;  // |T_h - T_{h/2}| / 15, relative to max(1, |T|)
};
// Fundamental solution of d_y T = U T from x to y (x < y).  `bind` fills the
// generators at a point.  Throws StepSizeTooCoarse above `tol`.
TransitionResult transitionMatrix(const ModelSpec& m, bool tilde, const std::function<void(double, Bindings&)>& bind,
                                  double x, double y, cplx lambda, double h, double tol = 1e-8);
// Numeric U or V at a point.
Mat2 laxMatrixAt(const MatrixSeries& M, const Bindings& b, cplx lambda);

struct MonodromyResult {
    cplx lambda;
    double t = 0, dt = 0;
    Mat2 Tright{}, TleftTilde{}, Linv{};  // single defect; chains fold the middle pieces into Linv
    Mat2 composite{};
    double tResidual = 0;
    double detDefect = 0;  // |det composite - det T det Linv det T~|
    double errorEstimate = 0;
};
// T(x0, x_max) L^{-1} T~(x_min, x0) per (lambda, t); residual of
// d_t T = V(x_max) T - T V~(x_min) with a central difference of width dt.
// `window` replaces [x_min, x_max] by [x, y] with x < every x0 < y; the
// evolution identity holds on any such window.
std::vector<MonodromyResult> monodromyWithDefect(const Scenario& s, const std::vector<cplx>& lambdas,
                                                 const std::vector<double>& times, double dt, double h = 0.01,
                                                 std::optional<std::pair<double, double>> window = std::nullopt);

// Defect contribution at order 3 against -alpha (p - q) - (p - q)^3 / 12 for a
// class III scenario; p - q from quadrature of u~ - u with p - q -> beta at x_min.
struct PotentialComparison {
    std::vector<double> t;
    std::vector<cplx> defect, potentialForm;
    double maxDeviation = 0;  // after fixing the constant at the first time
};
PotentialComparison kdvPotentialComparison(const Scenario& s);

// Serialization.  Numbers carry 17 significant digits.
std::string formatDouble(double v);
std::string chargeReportCsv(const ChargeReport& r);
nlohmann::json chargeReportJson(const ChargeReport& r);
std::string monodromyCsv(const std::string& model, const std::string& scenario, const std::vector<MonodromyResult>& r);
nlohmann::json monodromyJson(const std::string& model, const std::string& scenario, const std::vector<MonodromyResult>& r);

}  // namespace intdef
