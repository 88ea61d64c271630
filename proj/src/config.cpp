#include "intdef/config.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace intdef {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r"), b = s.find_last_not_of(" \t\r");
    return a == std::string::npos ? "" : s.substr(a, b - a + 1);
}

std::vector<std::string> splitList(const std::string& v) {
    std::vector<std::string> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

double toDouble(const std::string& key, const std::string& v) {
    try {
        size_t used = 0;
        double d = std::stod(v, &used);
        if (used != v.size()) throw std::invalid_argument(v);
        return d;
    } catch (const std::exception&) {
        throw ConfigError("key " + key + ": not a number: '" + v + "'");
    }
}

int toInt(const std::string& key, const std::string& v) {
    double d = toDouble(key, v);
    if (d != static_cast<int>(d)) throw ConfigError("key " + key + ": not an integer: '" + v + "'");
    return static_cast<int>(d);
}

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

std::string defectClassName(DefectClass c) {
    switch (c) {
        case DefectClass::I: return "I";
        case DefectClass::II: return "II";
        default: return "III";
    }
}

DefectClass parseDefectClass(const std::string& s) {
    if (s == "I") return DefectClass::I;
    if (s == "II") return DefectClass::II;
    if (s == "III") return DefectClass::III;
    throw UnknownClass("unknown defect class '" + s + "'");
}

cplx parseComplex(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (ch != ' ') s += ch;
    auto bad = [&]() -> cplx { throw ConfigError("not a complex number: '" + text + "'"); };
    auto real = [&](const std::string& t) {
        try {
            size_t used = 0;
            double d = std::stod(t, &used);
            if (used != t.size()) bad();
            return d;
        } catch (const std::logic_error&) {
            bad();
            return 0.0;
        }
    };
    if (s.empty()) return bad();
    if (s.back() != 'i') return {real(s), 0.0};
    s.pop_back();
    size_t cut = std::string::npos;
    for (size_t k = s.size(); k-- > 1;)
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
            cut = k;
            break;
        }
    std::string rePart = cut == std::string::npos ? "" : s.substr(0, cut);
    std::string imPart = cut == std::string::npos ? s : s.substr(cut);
    double im = imPart.empty() || imPart == "+" ? 1.0 : imPart == "-" ? -1.0 : real(imPart);
    return {rePart.empty() ? 0.0 : real(rePart), im};
}

std::string formatComplex(cplx v) {
    if (v.imag() == 0) return num(v.real());
    std::string im = num(v.imag());
    if (im[0] != '-') im = "+" + im;
    return (v.real() == 0 ? std::string() : num(v.real())) + im + "i";
}

void applyConfigLine(RunConfig& c, const std::string& raw) {
    std::string line = raw.substr(0, raw.find('#'));
    line = trim(line);
    if (line.empty()) return;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError("expected key = value: '" + line + "'");
    std::string key = trim(line.substr(0, eq)), v = trim(line.substr(eq + 1));
    auto need = [&] {
        if (v.empty()) throw ConfigError("key " + key + " needs a value");
    };
    if (key == "model") { need(); c.model = v; }
    else if (key == "model_file") { need(); c.modelFile = v; }
    else if (key == "scenario") { need(); c.scenario = v; }
    else if (key.rfind("scenario.", 0) == 0) { need(); c.scenarioOverrides[key.substr(9)] = toDouble(key, v); }
    else if (key == "defect.class") {
        need();
        try { c.defect.cls = parseDefectClass(v); } catch (const UnknownClass& e) { throw ConfigError(e.what()); }
    }
    else if (key == "defect.alpha_plus") { need(); c.defect.alphaPlus = toDouble(key, v); }
    else if (key == "defect.beta") { need(); c.defect.beta = toDouble(key, v); }
    else if (key == "defect.x0") { need(); c.defect.x0 = toDouble(key, v); }
    else if (key == "defect.sign") {
        need();
        int s = toInt(key, v);
        if (s != 1 && s != -1) throw ConfigError("defect.sign must be 1 or -1");
        c.defect.sign = s;
    }
    else if (key == "defect.epsilon") {
        need();
        int e = toInt(key, v);
        if (e != 1 && e != -1) throw ConfigError("defect.epsilon must be 1 or -1");
        c.defect.epsilon = e;
    }
    else if (key == "orders") {
        need();
        int n = toInt(key, v);
        if (n < 0) throw ConfigError("orders must be non-negative");
        c.orders = n;
    }
    else if (key == "grid.x_min") { need(); c.xMin = toDouble(key, v); }
    else if (key == "grid.x_max") { need(); c.xMax = toDouble(key, v); }
    else if (key == "grid.h") {
        need();
        c.h = toDouble(key, v);
        if (!(*c.h > 0)) throw ConfigError("grid.h must be positive");
    }
    else if (key == "times.t0") { need(); c.t0 = toDouble(key, v); }
    else if (key == "times.t1") { need(); c.t1 = toDouble(key, v); }
    else if (key == "times.steps") {
        need();
        int n = toInt(key, v);
        if (n < 0) throw ConfigError("times.steps must be non-negative");
        c.steps = n;
    }
    else if (key == "lambda") {
        std::vector<cplx> ls;
        for (auto& s : splitList(v)) ls.push_back(parseComplex(s));
        c.lambdas = ls;
    }
    else if (key == "monodromy.dt") {
        need();
        c.dt = toDouble(key, v);
        if (!(*c.dt > 0)) throw ConfigError("monodromy.dt must be positive");
    }
    else if (key == "monodromy.window") {
        auto parts = splitList(v);
        if (parts.size() != 2) throw ConfigError("monodromy.window takes two numbers");
        c.window = std::make_pair(toDouble(key, parts[0]), toDouble(key, parts[1]));
    }
    else if (key == "output.directory") { need(); c.outputDirectory = v; }
    else if (key == "output.formats") {
        std::set<std::string> f;
        for (auto& s : splitList(v)) {
            if (s != "csv" && s != "json" && s != "plot-script") throw ConfigError("unknown output format '" + s + "'");
            f.insert(s);
        }
        c.formats = f;
    }
    else if (key == "checks") { c.checks = splitList(v); }
    else throw ConfigError("unknown key '" + key + "'");
}

RunConfig parseConfig(const std::string& text) {
    RunConfig c;
    std::stringstream ss(text);
    std::string line;
    int no = 0;
    while (std::getline(ss, line)) {
        ++no;
        try {
            applyConfigLine(c, line);
        } catch (const ConfigError& e) {
            throw ConfigError("line " + std::to_string(no) + ": " + e.what());
        }
    }
    return c;
}

std::string serializeConfig(const RunConfig& c) {
    std::ostringstream os;
    auto kv = [&](const std::string& k, const std::string& v) { os << k << " = " << v << '\n'; };
    auto join = [](const auto& xs, auto f) {
        std::string s;
        for (auto& x : xs) s += (s.empty() ? "" : ", ") + f(x);
        return s;
    };
    if (c.model) kv("model", *c.model);
    if (c.modelFile) kv("model_file", *c.modelFile);
    if (c.scenario) kv("scenario", *c.scenario);
    for (auto& [k, v] : c.scenarioOverrides) kv("scenario." + k, num(v));
    if (c.defect.cls) kv("defect.class", defectClassName(*c.defect.cls));
    if (c.defect.alphaPlus) kv("defect.alpha_plus", num(*c.defect.alphaPlus));
    if (c.defect.beta) kv("defect.beta", num(*c.defect.beta));
    if (c.defect.sign) kv("defect.sign", std::to_string(*c.defect.sign));
    if (c.defect.epsilon) kv("defect.epsilon", std::to_string(*c.defect.epsilon));
    if (c.defect.x0) kv("defect.x0", num(*c.defect.x0));
    if (c.orders) kv("orders", std::to_string(*c.orders));
    if (c.xMin) kv("grid.x_min", num(*c.xMin));
    if (c.xMax) kv("grid.x_max", num(*c.xMax));
    if (c.h) kv("grid.h", num(*c.h));
    if (c.t0) kv("times.t0", num(*c.t0));
    if (c.t1) kv("times.t1", num(*c.t1));
    if (c.steps) kv("times.steps", std::to_string(*c.steps));
    if (c.lambdas) kv("lambda", join(*c.lambdas, formatComplex));
    if (c.dt) kv("monodromy.dt", num(*c.dt));
    if (c.window) kv("monodromy.window", num(c.window->first) + ", " + num(c.window->second));
    if (c.outputDirectory) kv("output.directory", *c.outputDirectory);
    if (c.formats) kv("output.formats", join(*c.formats, [](const std::string& s) { return s; }));
    if (c.checks) kv("checks", join(*c.checks, [](const std::string& s) { return s; }));
    return os.str();
}

ModelSpec modelFromConfig(const RunConfig& c) {
    if (c.modelFile) {
        std::ifstream in(*c.modelFile);
        if (!in) throw ConfigError("cannot read model file " + *c.modelFile);
        try {
            return modelFromJson(nlohmann::json::parse(in));
        } catch (const std::exception& e) {
            throw ConfigError("model file " + *c.modelFile + ": " + e.what());
        }
    }
    if (c.model) {
        try {
            return modelById(*c.model);
        } catch (const std::out_of_range&) {
            throw ConfigError("unknown model '" + *c.model + "'");
        }
    }
    if (c.scenario) return makeScenario(*c.scenario, c.scenarioOverrides).modelSpec();
    throw ConfigError("no model given");
}

DefectSpec defectFromConfig(const RunConfig& c, const ModelSpec& m) {
    DefectSpec d;
    switch (m.reductionClass) {
        case ReductionClass::I: d.cls = DefectClass::I; break;
        case ReductionClass::II: d.cls = DefectClass::II; break;
        case ReductionClass::III: d.cls = DefectClass::III; break;
        default: d.cls = DefectClass::I;
    }
    d.epsilon = m.epsilon;
    d.nilpotent = m.name == ModelName::LiouvilleLC;
    const DefectOverrides& o = c.defect;
    if (o.cls) d.cls = *o.cls;
    if (o.alphaPlus) d.alphaPlus = *o.alphaPlus;
    if (o.beta) d.betaOrAlpha = *o.beta;
    if (o.sign) d.signBranch = *o.sign;
    if (o.epsilon) d.epsilon = *o.epsilon;
    if (o.x0) d.x0 = *o.x0;
    try {
        d.validate();
    } catch (const InvalidParams& e) {
        throw ConfigError(e.what());
    }
    return d;
}

Scenario scenarioFromConfig(const RunConfig& c) {
    if (!c.scenario) throw ConfigError("no scenario given");
    Scenario s = makeScenario(*c.scenario, c.scenarioOverrides);
    if (c.model && *c.model != s.modelSpec().id)
        throw ConfigError("scenario " + s.name + " belongs to model " + s.modelSpec().id + ", not " + *c.model);
    if (c.xMin) s.xMin = *c.xMin;
    if (c.xMax) s.xMax = *c.xMax;
    if (c.h) s.h = *c.h;
    if (!(s.xMax > s.xMin)) throw ConfigError("grid.x_max must exceed grid.x_min");
    if (c.t0 || c.t1 || c.steps) {
        double a = c.t0.value_or(s.times.front()), b = c.t1.value_or(s.times.back());
        int n = c.steps.value_or(static_cast<int>(s.times.size()) - 1);
        s.times.clear();
        for (int i = 0; i <= n; ++i) s.times.push_back(n == 0 ? a : a + (b - a) * i / n);
    }
    if (c.defect.any()) {
        if (s.defects.size() != 1) throw ConfigError("defect overrides apply to single-defect scenarios");
        DefectSpec& d = s.defects[0];
        const DefectOverrides& o = c.defect;
        if (o.cls) d.cls = *o.cls;
        if (o.alphaPlus) d.alphaPlus = *o.alphaPlus;
        if (o.beta) d.betaOrAlpha = *o.beta;
        if (o.sign) d.signBranch = *o.sign;
        if (o.epsilon) d.epsilon = *o.epsilon;
        if (o.x0) d.x0 = *o.x0;
        try {
            d.validate();
        } catch (const InvalidParams& e) {
            throw ConfigError(e.what());
        }
    }
    return s;
}

}  // namespace intdef
