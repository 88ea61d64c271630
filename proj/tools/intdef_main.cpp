// Command-line front end: expand, verify, simulate, monodromy, list-models,
// list-scenarios.  Exit codes: 0 ok, 1 failed check, 2 config error,
// 3 symbolic failure, 4 quadrature underflow.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "intdef/config.hpp"
#include "intdef/expand.hpp"

using namespace intdef;
namespace fs = std::filesystem;

namespace {

struct CheckLine {
    std::string check, subject;
    bool pass = true;
    std::string detail;
};

RunConfig loadConfig(const std::string& path, const std::vector<std::string>& sets) {
    RunConfig c;
    if (!path.empty()) {
        std::ifstream in(path);
        if (!in) throw ConfigError("cannot read config file " + path);
        std::stringstream ss;
        ss << in.rdbuf();
        c = parseConfig(ss.str());
    }
    for (auto& s : sets) applyConfigLine(c, s);
    return c;
}

void writeFile(const fs::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary);
    if (!out) throw ConfigError("cannot write " + p.string());
    out << text;
}

bool wants(const RunConfig& c, const std::string& f) {
    return !c.formats || c.formats->count(f);
}

std::optional<fs::path> outDir(const RunConfig& c) {
    if (!c.outputDirectory) return std::nullopt;
    fs::path d(*c.outputDirectory);
    std::error_code ec;
    fs::create_directories(d, ec);
    if (ec) throw ConfigError("cannot create output directory " + d.string());
    return d;
}

int cmdExpand(const RunConfig& c) {
    ModelSpec m = modelFromConfig(c);
    int sign = c.defect.sign.value_or(1);
    int N = c.ordersOr(3);
    std::string text = expandText(m, N, sign);
    if (auto d = outDir(c)) {
        if (wants(c, "csv") || wants(c, "plot-script") || !c.formats) writeFile(*d / "expand.txt", text);
        if (wants(c, "json")) writeFile(*d / "expand.json", expandJson(m, N, sign).dump(2) + "\n");
    } else {
        std::cout << text;
    }
    return 0;
}

std::string firstNonzero(const MatrixSeries& r) {
    static const char* names[4] = {"11", "12", "21", "22"};
    for (int k = 0; k < 4; ++k)
        for (auto it = r.e[k].coeffs().rbegin(); it != r.e[k].coeffs().rend(); ++it)
            if (!it->second.isZero())
                return "residual nonzero at lambda^{" + std::to_string(it->first) + "} entry " + names[k] + ": " +
                       it->second.str();
    return "";
}

std::vector<ModelSpec> checkModels(const RunConfig& c) {
    if (c.modelFile || c.model) return {modelFromConfig(c)};
    return builtinModels();
}

void runChecks(const RunConfig& c, const std::string& which, std::vector<CheckLine>& out) {
    auto add = [&](const std::string& subject, bool pass, const std::string& detail = "") {
        out.push_back({which, subject, pass, detail});
    };
    if (which == "zero-curvature") {
        for (auto& m : checkModels(c)) {
            MatrixSeries r = zeroCurvatureResidual(m);
            add(m.id, r.isZero(), firstNonzero(r));
        }
    } else if (which == "conservation") {
        for (auto& m : checkModels(c)) {
            int lo = m.scheme == Scheme::AKNS ? 1 : 0, hi = m.scheme == Scheme::AKNS ? 5 : 3;
            for (int n = lo; n <= hi; ++n) {
                DiffPolynomial res = verifyBulkConservation(m, n);
                add(m.id + " n=" + std::to_string(n), res.isZero(), res.isZero() ? "" : "residual " + res.str());
            }
        }
    } else if (which == "riccati") {
        for (auto& m : checkModels(c)) {
            LaurentSeries G = gammaSeries(m, 6);
            for (auto kind : {RiccatiKind::x, RiccatiKind::t}) {
                LaurentSeries r = riccatiResidual(m, G, kind);
                std::string detail;
                for (auto& [e, p] : r.coeffs())
                    if (!p.isZero()) {
                        detail = "residual nonzero at lambda^{" + std::to_string(e) + "}";
                        break;
                    }
                add(m.id + (kind == RiccatiKind::x ? " x" : " t"), r.isZero(), detail);
            }
        }
    } else if (which == "displays") {
        for (auto& d : referenceDisplays()) {
            for (int s : {1, -1}) {
                if (d.model == ModelName::LiouvilleLC && s == -1) continue;
                MatchResult r = matchDisplay(d, s);
                add(modelByName(d.model).id + " n=" + std::to_string(d.order) + " s=" + std::to_string(s), r.ok, r.detail);
            }
        }
    } else if (which == "projector") {
        for (auto cls : {DefectClass::I, DefectClass::II, DefectClass::III}) {
            DefectSpec d;
            d.cls = cls;
            ProjectorForm p = projectorDecompose(d);
            add("class " + defectClassName(cls), p.idempotent, p.idempotent ? "" : "P^2 != P");
        }
    } else if (which == "scenarios") {
        std::vector<Scenario> ss;
        if (c.scenario) ss.push_back(scenarioFromConfig(c));
        else ss = builtinScenarios();
        for (auto& s : ss) {
            BacklundCheck b = checkScenario(s);
            std::ostringstream os;
            os << "pde " << formatDouble(b.maxPde) << " bt_x " << formatDouble(b.maxX) << " bt_t " << formatDouble(b.maxT);
            add(s.name, b.maxPde < 1e-10 && b.maxX < 1e-8 && b.maxT < 1e-8, os.str());
            bool redundant = b.maxDiagX <= 10 * b.maxOffX + 1e-13 && b.maxDiagT <= 10 * b.maxOffT + 1e-13;
            out.push_back({"redundancy", s.name, redundant, redundant ? "" : "a1/a4 residuals exceed the a2/a3 ones"});
        }
    } else {
        throw ConfigError("unknown check '" + which + "'");
    }
}

const std::vector<std::string> kAllChecks = {"zero-curvature", "conservation", "riccati", "displays", "projector",
                                             "scenarios"};

int cmdVerify(const RunConfig& c) {
    std::vector<std::string> checks = c.checks ? *c.checks : kAllChecks;
    if (checks.size() == 1 && checks[0] == "all") checks = kAllChecks;
    for (auto& ch : checks)
        if (std::find(kAllChecks.begin(), kAllChecks.end(), ch) == kAllChecks.end())
            throw ConfigError("unknown check '" + ch + "'");
    if (checks.empty()) std::cerr << "warning: empty check list, nothing verified\n";
    std::vector<CheckLine> lines;
    for (auto& ch : checks) runChecks(c, ch, lines);
    int failed = 0;
    nlohmann::json j;
    j["schema"] = "intdef.verify/1";
    j["checks"] = nlohmann::json::array();
    for (auto& l : lines) {
        failed += !l.pass;
        std::cout << (l.pass ? "PASS " : "FAIL ") << l.check << ' ' << l.subject;
        if (!l.pass && !l.detail.empty()) std::cout << ": " << l.detail;
        std::cout << '\n';
        j["checks"].push_back({{"check", l.check}, {"subject", l.subject}, {"pass", l.pass}, {"detail", l.detail}});
    }
    std::cout << lines.size() << " checks, " << failed << " failed\n";
    j["failed"] = failed;
    if (auto d = outDir(c)) writeFile(*d / "verify.json", j.dump(2) + "\n");
    return failed ? 1 : 0;
}

std::string plotScript(const ChargeReport& r, int N) {
    std::ostringstream os;
    os << "# gnuplot script for charges.csv\n"
       << "set datafile separator ','\n"
       << "set xlabel 't'\nset ylabel 'Re total'\n"
       << "set title '" << r.model << " / " << r.scenario << "'\n"
       << "plot for [n=1:" << N << "] 'charges.csv' using (column('order')==n ? column('t') : 1/0):(column('total_re')) "
       << "with linespoints title sprintf('order %d', n)\n";
    return os.str();
}

int cmdSimulate(const RunConfig& c) {
    Scenario s = scenarioFromConfig(c);
    BacklundCheck b = checkScenario(s);
    if (!(b.maxPde < 1e-10 && b.maxX < 1e-8 && b.maxT < 1e-8)) {
        std::cerr << "scenario " << s.name << " is not an exact Backlund pair (pde " << b.maxPde << ", bt_x " << b.maxX
                  << ", bt_t " << b.maxT << ")\n";
        return 1;
    }
    if (b.constraintDiagnostic) std::cerr << "diagnostic: |u~ - u|^2 exceeds beta^2 somewhere on the samples\n";
    ChargeOptions opt;
    opt.maxOrder = c.ordersOr(3);
    ChargeReport r = computeCharges(s, opt);
    std::string csv = chargeReportCsv(r);
    if (auto d = outDir(c)) {
        if (wants(c, "csv")) writeFile(*d / "charges.csv", csv);
        if (wants(c, "json")) writeFile(*d / "charges.json", chargeReportJson(r).dump(2) + "\n");
        if (c.formats && c.formats->count("plot-script")) writeFile(*d / "plot_charges.gp", plotScript(r, opt.maxOrder));
        for (auto& [n, dr] : r.drift) std::cout << "order " << n << " drift " << formatDouble(dr) << '\n';
    } else {
        std::cout << csv;
    }
    return 0;
}

int cmdMonodromy(const RunConfig& c) {
    Scenario s = scenarioFromConfig(c);
    std::vector<cplx> lambdas = c.lambdas.value_or(std::vector<cplx>{0.7, 1.3});
    double dt = c.dt.value_or(0.1);
    double h = c.h.value_or(0.01);
    auto res = monodromyWithDefect(s, lambdas, s.times, dt, h, c.window);
    std::string model = s.modelSpec().id;
    if (auto d = outDir(c)) {
        if (wants(c, "csv")) writeFile(*d / "monodromy.csv", monodromyCsv(model, s.name, res));
        if (wants(c, "json")) writeFile(*d / "monodromy.json", monodromyJson(model, s.name, res).dump(2) + "\n");
        double worst = 0;
        for (auto& r : res) worst = std::max(worst, r.tResidual);
        std::cout << res.size() << " samples, max t-residual " << formatDouble(worst) << '\n';
    } else {
        std::cout << monodromyCsv(model, s.name, res);
    }
    return 0;
}

int cmdListModels(const std::string& jsonId) {
    if (!jsonId.empty()) {
        std::cout << modelToJson(modelById(jsonId)).dump(2) << '\n';
        return 0;
    }
    for (auto& m : builtinModels())
        std::cout << m.id << "  scheme=" << schemeName(m.scheme) << " class=" << className(m.reductionClass)
                  << " epsilon=" << m.epsilon << (m.lightCone ? " light-cone" : "") << '\n';
    return 0;
}

int cmdListScenarios() {
    for (auto& s : builtinScenarios()) {
        std::cout << s.name << "  model=" << s.modelSpec().id << "  " << s.description << "\n   params:";
        for (auto& [k, v] : s.params) std::cout << ' ' << k << '=' << formatDouble(v);
        std::cout << '\n';
    }
    return 0;
}

template <class F>
int guarded(F f) {
    try {
        return f();
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const InvalidParams& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const UnknownClass& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "config error: unknown name (" << e.what() << ")\n";
        return 2;
    } catch (const QuadratureUnderflow& e) {
        std::cerr << e.what() << "\nthe fields have not decayed at the domain edges; enlarge grid.x_min/grid.x_max\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "symbolic failure: " << e.what() << '\n';
        return 3;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Integrable defects: charge hierarchies, Backlund scenarios and monodromy checks"};
    app.require_subcommand(1);
    std::string configPath;
    std::vector<std::string> sets;
    auto withConfig = [&](CLI::App* sub) {
        sub->add_option("-c,--config", configPath, "key = value config file");
        sub->add_option("-s,--set", sets, "extra 'key=value' lines, applied after the file");
    };
    auto* expand = app.add_subcommand("expand", "dump Gamma_n, densities, fluxes and defect terms");
    auto* verify = app.add_subcommand("verify", "run symbolic and scenario checks");
    auto* simulate = app.add_subcommand("simulate", "charge report on a scenario");
    auto* mono = app.add_subcommand("monodromy", "defect-dressed transition matrix and its evolution residual");
    auto* lm = app.add_subcommand("list-models", "registered models");
    auto* ls = app.add_subcommand("list-scenarios", "built-in scenarios");
    std::string jsonId;
    lm->add_option("--json", jsonId, "print the JSON model file of one model");
    for (auto* s : {expand, verify, simulate, mono}) withConfig(s);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    auto load = [&] { return loadConfig(configPath, sets); };
    if (*expand) return guarded([&] { return cmdExpand(load()); });
    if (*verify) return guarded([&] { return cmdVerify(load()); });
    if (*simulate) return guarded([&] { return cmdSimulate(load()); });
    if (*mono) return guarded([&] { return cmdMonodromy(load()); });
    if (*lm) return guarded([&] { return cmdListModels(jsonId); });
    if (*ls) return guarded(cmdListScenarios);
    return 2;
}
