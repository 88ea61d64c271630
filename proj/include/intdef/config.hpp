#pragma once
// Flat key = value run configuration shared by the command-line tool.
//
//   model = sine-gordon            model_file = path/to/model.json
//   scenario = sg-kink             scenario.<param> = value
//   defect.class = II              defect.alpha_plus / beta / sign / epsilon / x0
//   orders = 3
//   grid.x_min / grid.x_max / grid.h
//   times.t0 / times.t1 / times.steps
//   lambda = 0.7, 1.3+0.1i         monodromy.dt = 0.1   monodromy.window = -6, 6
//   output.directory = out         output.formats = csv, json, plot-script
//   checks = zero-curvature, conservation, ...
//
// '#' starts a comment.  Unknown keys are rejected.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "intdef/harness.hpp"

namespace intdef {

struct DefectOverrides {
    std::optional<DefectClass> cls;
    std::optional<double> alphaPlus, beta, x0;
    std::optional<int> sign, epsilon;
    bool any() const { return cls || alphaPlus || beta || x0 || sign || epsilon; }
};

struct RunConfig {
    std::optional<std::string> model, modelFile, scenario;
    std::map<std::string, double> scenarioOverrides;
    DefectOverrides defect;
    std::optional<int> orders;
    std::optional<double> xMin, xMax, h;
    std::optional<double> t0, t1;
    std::optional<int> steps;
    std::optional<std::vector<cplx>> lambdas;
    std::optional<double> dt;
    std::optional<std::pair<double, double>> window;
    std::optional<std::string> outputDirectory;
    std::optional<std::set<std::string>> formats;
    std::optional<std::vector<std::string>> checks;

    int ordersOr(int d) const { return orders.value_or(d); }
};

RunConfig parseConfig(const std::string& text);        // ConfigError
std::string serializeConfig(const RunConfig& c);
void applyConfigLine(RunConfig& c, const std::string& line);  // one "key = value"

// The scenario a config describes: named scenario, parameter overrides, then
// grid, time and defect overrides.
Scenario scenarioFromConfig(const RunConfig& c);
// The model: model_file if given, else the named built-in, else the scenario's.
ModelSpec modelFromConfig(const RunConfig& c);
DefectSpec defectFromConfig(const RunConfig& c, const ModelSpec& m);

std::string defectClassName(DefectClass c);
DefectClass parseDefectClass(const std::string& s);
cplx parseComplex(const std::string& s);
std::string formatComplex(cplx v);

}  // namespace intdef
