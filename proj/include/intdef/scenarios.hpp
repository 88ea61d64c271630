#pragma once
// Closed-form Backlund pairs used as ground truth for the numeric checks.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "intdef/defects.hpp"
#include "intdef/jet.hpp"

namespace intdef {

// A physical field u(x, t) (or the potential v for light-cone models, or the
// KdV field itself) evaluated on jets.
struct PhysicalFn {
    std::function<JetX(const JetX&, const JetX&)> fx;
    std::function<JetT(const JetT&, const JetT&)> ft;
    std::function<JetL(const JetL&, const JetL&)> fl;
};

template <class F>
PhysicalFn makeFieldFn(F f) {
    return {[f](const JetX& x, const JetX& t) { return f(x, t); },
            [f](const JetT& x, const JetT& t) { return f(x, t); },
            [f](const JetL& x, const JetL& t) { return f(x, t); }};
}

PhysicalFn zeroField();

struct Scenario {
    std::string name;
    std::string description;
    ModelName model = ModelName::sineGordonLC;
    std::vector<DefectSpec> defects;   // x0 strictly increasing
    std::vector<PhysicalFn> regions;   // defects.size() + 1, left to right
    std::map<std::string, double> params;
    double xMin = -40, xMax = 40, h = 0.01;
    std::vector<double> times;
    bool decaying = true;              // fields vanish at the edges
    bool staticFields = false;

    const ModelSpec& modelSpec() const { return modelByName(model); }
    const DefectSpec& defect() const { return defects.front(); }
};

// Built-in names: sg-kink, sg-two-kink, nls-soliton, nls-vacuum, mkdv-soliton,
// kdv-soliton, liouville-pair.
std::vector<std::string> builtinScenarioNames();
std::vector<Scenario> builtinScenarios();
// Overrides are scenario parameters (see Scenario::params); defect parameters
// follow from them.  Unknown names or keys throw ConfigError.
Scenario makeScenario(const std::string& name, const std::map<std::string, double>& overrides = {});

// Fill generic generators for region k at (x, t).  asTilde writes q~, r~ (and
// the auxiliary tilde generators), applying the class III twist.  withT also
// binds first time derivatives of q, r (or q~, r~).
void bindRegion(const Scenario& s, int region, double x, double t, bool asTilde, Bindings& b, bool withT = false);
// Undifferentiated generators only (enough for U).
void bindRegionValues(const Scenario& s, int region, double x, double t, bool asTilde, Bindings& b);
// Both sides of defect k, parameters and the tracked Omega.
Bindings defectBindings(const Scenario& s, int k, double x, double t, bool withT = false,
                        std::optional<cplx> previousOmega = std::nullopt);

// Equation-of-motion residual |q_t - eom| (and r) for region k at (x, t).
double pdeResidual(const Scenario& s, int region, double x, double t);

struct BacklundCheck {
    double maxX = 0, maxT = 0;            // full matrix residuals
    double maxOffX = 0, maxDiagX = 0;     // a2/a3 vs a1/a4 equations
    double maxOffT = 0, maxDiagT = 0;
    double maxPde = 0;
    bool constraintDiagnostic = false;    // class I, eps = -1: |u~ - u|^2 > beta^2 seen
};
// Residuals at `samples` random points (fixed seed) over the domain and times.
BacklundCheck checkScenario(const Scenario& s, int samples = 20, unsigned seed = 7);
bool admitScenario(const Scenario& s, double pdeTol = 1e-10, double btTol = 1e-8);

struct BacklundSolution {
    std::vector<double> xs;
    std::vector<cplx> Q, R, Omega;  // generic tilde generators along the grid
};
// Integrate the x-part of the Backlund transformation from x_min with RK4.
// Unknowns (q~, r~, Omega); the initial q~, r~ default to the seed values (the
// fixed point).  Omega starts on the root whose mode decays towards x_min.
// Throws BlowUp on divergence or, for class I with eps = -1, when the
// radicand of Omega turns positive (|u~ - u|^2 > beta^2).
BacklundSolution backlundSolveX(const ModelSpec& m, const DefectSpec& d, const PhysicalFn& seed, double t,
                                double xMin, double xMax, double h, std::optional<std::pair<cplx, cplx>> initial = std::nullopt);

// Generic (q, r) jets of a physical field for one side.
template <class J>
struct GenericJets {
    J q, r;
    std::optional<J> cosv, sinv, expv;
};
template <class J>
GenericJets<J> toGeneric(const ModelSpec& m, const J& phys, bool tildeTwist);

}  // namespace intdef
