#include "intdef/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace intdef {

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<double> linspace(double a, double b, int n) {
    std::vector<double> v;
    for (int i = 0; i < n; ++i) v.push_back(n == 1 ? a : a + (b - a) * i / (n - 1));
    return v;
}

double param(const std::map<std::string, double>& p, const std::string& k) {
    auto it = p.find(k);
    if (it == p.end()) throw ConfigError("scenario parameter missing: " + k);
    return it->second;
}

template <class J>
void fill(const J& jet, Base b, int maxOrder, Bindings& out, bool withT) {
    for (int k = 0; k <= maxOrder; ++k) out.set(b, k, jet.deriv(k, 0));
    if (withT && static_cast<int>(b) < 4) {
        if constexpr (J::W > 1) out.setT(b, jet.deriv(0, 1));
    }
}

template <class J>
void bindJets(const ModelSpec& m, const J& phys, bool asTilde, Bindings& b, bool withT, int maxOrder) {
    bool twist = asTilde && m.reductionClass == ReductionClass::III;
    GenericJets<J> g = toGeneric(m, phys, twist);
    Base q = asTilde ? Base::qt : Base::q, r = asTilde ? Base::rt : Base::r;
    fill(g.q, q, maxOrder, b, withT);
    fill(g.r, r, maxOrder, b, withT);
    if (g.cosv) b.set(asTilde ? Base::cosvt : Base::cosv, 0, g.cosv->value());
    if (g.sinv) b.set(asTilde ? Base::sinvt : Base::sinv, 0, g.sinv->value());
    if (g.expv) b.set(asTilde ? Base::expvt : Base::expv, 0, g.expv->value());
}

}  // namespace

template <class J>
GenericJets<J> toGeneric(const ModelSpec& m, const J& phys, bool twist) {
    GenericJets<J> g;
    double e = m.epsilon;
    switch (m.potential) {
        case Potential::sineGordon:
            g.q = phys.dx() * -0.5;
            g.r = g.q * e;
            g.cosv = cos(phys);
            g.sinv = sin(phys);
            return g;
        case Potential::liouville:
            g.q = phys.dx() * 0.5;
            g.r = g.q;
            g.expv = exp(phys);
            return g;
        default: break;
    }
    switch (m.reductionClass) {
        case ReductionClass::I:
            g.q = phys;
            g.r = phys.conj() * e;
            break;
        case ReductionClass::II:
            g.q = phys;
            g.r = phys * e;
            break;
        case ReductionClass::III:
            g.q = twist ? -phys : phys;
            g.r = J(twist ? -e : e);
            break;
        default:
            g.q = phys;
            g.r = phys.conj();
    }
    return g;
}

template GenericJets<JetX> toGeneric(const ModelSpec&, const JetX&, bool);
template GenericJets<JetT> toGeneric(const ModelSpec&, const JetT&, bool);
template GenericJets<JetL> toGeneric(const ModelSpec&, const JetL&, bool);

PhysicalFn zeroField() {
    return makeFieldFn([](const auto& x, const auto&) { return x * 0.0; });
}

std::vector<std::string> builtinScenarioNames() {
    return {"sg-kink", "sg-two-kink", "nls-soliton", "nls-vacuum", "mkdv-soliton", "kdv-soliton", "liouville-pair"};
}

std::vector<Scenario> builtinScenarios() {
    std::vector<Scenario> out;
    for (auto& n : builtinScenarioNames()) out.push_back(makeScenario(n));
    return out;
}

Scenario makeScenario(const std::string& name, const std::map<std::string, double>& overrides) {
    Scenario s;
    s.name = name;
    std::map<std::string, double> p;
    if (name == "sg-kink")
        p = {{"alpha", 1.0}, {"xc", -2.0}, {"x0", 0.0}};
    else if (name == "sg-two-kink")
        p = {{"a1", 1.0}, {"a2", 1.5}, {"x1", -2.0}, {"x2", 2.0}};
    else if (name == "nls-soliton")
        p = {{"alpha_plus", 0.5}, {"beta", 1.0}, {"xc", -2.0}, {"x0", 0.0}};
    else if (name == "nls-vacuum")
        p = {{"alpha_plus", 0.5}, {"beta", 1.0}, {"x0", 0.0}};
    else if (name == "mkdv-soliton")
        p = {{"alpha", 1.0}, {"xc", 2.0}, {"x0", 0.0}};
    else if (name == "kdv-soliton")
        p = {{"k", 1.0}, {"xc", -2.0}, {"x0", 0.0}};
    else if (name == "liouville-pair")
        p = {{"gamma", 1.0}, {"x0", 0.0}};
    else
        throw ConfigError("unknown scenario: " + name);
    for (auto& [k, v] : overrides) {
        if (!p.count(k)) throw ConfigError("scenario " + name + " has no parameter " + k);
        p[k] = v;
    }
    s.params = p;
    s.times = linspace(0.0, 5.0, 11);

    auto single = [&](DefectSpec d, PhysicalFn left, PhysicalFn right) {
        d.x0 = param(p, "x0");
        d.validate();
        s.defects = {d};
        s.regions = {std::move(left), std::move(right)};
    };

    if (name == "sg-kink") {
        double a = param(p, "alpha"), xc = param(p, "xc");
        if (a <= 0) throw ConfigError("alpha must be positive");
        s.model = ModelName::sineGordonLC;
        s.description = "vacuum | kink, v~ = 4 atan exp(alpha (x - xc) + t/alpha)";
        DefectSpec d;
        d.cls = DefectClass::II;
        d.betaOrAlpha = a;
        d.epsilon = -1;
        single(d, makeFieldFn([a, xc](const auto& x, const auto& t) { return 4.0 * atan(exp(a * (x - xc) + t / a)); }),
               zeroField());
    } else if (name == "sg-two-kink") {
        double a1 = param(p, "a1"), a2 = param(p, "a2");
        if (a1 <= 0 || a2 <= 0 || a1 == a2) throw ConfigError("a1, a2 must be positive and distinct");
        s.model = ModelName::sineGordonLC;
        s.description = "vacuum | kink(a1) | two-kink(a1, a2), chained at x1 < x2";
        auto kink = [](double a) {
            return [a](const auto& x, const auto& t) { return 4.0 * atan(exp(a * x + t / a)); };
        };
        auto v1 = kink(a1), v2 = kink(a2);
        double ratio = (a2 + a1) / (a1 - a2);
        auto v12 = [=](const auto& x, const auto& t) { return 4.0 * atan(ratio * tan((v1(x, t) - v2(x, t)) / 4.0)); };
        DefectSpec d1, d2;
        d1.cls = d2.cls = DefectClass::II;
        d1.epsilon = d2.epsilon = -1;
        d1.betaOrAlpha = a2;
        d1.x0 = param(p, "x1");
        d2.betaOrAlpha = a1;
        d2.x0 = param(p, "x2");
        s.defects = composeDefects({d1, d2}).defects;
        s.regions = {makeFieldFn(v12), makeFieldFn(v1), zeroField()};
    } else if (name == "nls-soliton" || name == "nls-vacuum") {
        double ap = param(p, "alpha_plus"), b = param(p, "beta");
        if (b == 0) throw ConfigError("beta must be nonzero");
        s.model = ModelName::NLSfocusing;
        DefectSpec d;
        d.cls = DefectClass::I;
        d.alphaPlus = ap;
        d.betaOrAlpha = b;
        d.epsilon = -1;
        if (name == "nls-vacuum") {
            s.description = "vacuum on both sides";
            s.staticFields = true;
            single(d, zeroField(), zeroField());
        } else {
            double eta = std::abs(b), xi = ap, xc = param(p, "xc");
            s.description = "vacuum | bright soliton, eta = |beta|, velocity 2 alpha_plus";
            const std::complex<double> I(0, 1);
            single(d, makeFieldFn([=](const auto& x, const auto& t) {
                       return eta * sech(eta * (x - 2.0 * xi * t - xc)) * exp(I * (xi * x + (eta * eta - xi * xi) * t));
                   }),
                   zeroField());
        }
    } else if (name == "mkdv-soliton") {
        double a = param(p, "alpha"), xc = param(p, "xc");
        if (a == 0) throw ConfigError("alpha must be nonzero");
        double k = std::abs(a);
        s.model = ModelName::mKdVminus;
        s.description = "vacuum | soliton k sech(k(x - k^2 t - xc)), k = |alpha|";
        DefectSpec d;
        d.cls = DefectClass::II;
        d.betaOrAlpha = a;
        d.epsilon = -1;
        single(d, makeFieldFn([k, xc](const auto& x, const auto& t) { return k * sech(k * (x - k * k * t - xc)); }),
               zeroField());
    } else if (name == "kdv-soliton") {
        double k = param(p, "k"), xc = param(p, "xc");
        if (k <= 0) throw ConfigError("k must be positive");
        s.model = ModelName::KdVplus;
        s.description = "vacuum | soliton -2k^2 sech^2(k(x - 4k^2 t - xc)), beta = 2k";
        DefectSpec d;
        d.cls = DefectClass::III;
        d.betaOrAlpha = 2 * k;
        d.epsilon = 1;
        single(d, makeFieldFn([k, xc](const auto& x, const auto& t) {
                   auto sh = sech(k * (x - 4.0 * k * k * t - xc));
                   return -2.0 * k * k * sh * sh;
               }),
               zeroField());
    } else if (name == "liouville-pair") {
        double g = param(p, "gamma");
        if (g <= 0) throw ConfigError("gamma must be positive");
        s.model = ModelName::LiouvilleLC;
        s.description = "v = -2 ln(2 cosh((x-t)/2)) and its Backlund partner";
        s.decaying = false;
        s.xMin = -20;
        s.xMax = 20;
        double h0 = (-g + std::sqrt(g * g + 16)) / 4;
        auto v = [](const auto& x, const auto& t) { return -2.0 * log(2.0 * cosh((x - t) / 2.0)); };
        DefectSpec d;
        d.cls = DefectClass::II;
        d.nilpotent = true;
        d.betaOrAlpha = g;
        d.epsilon = 1;
        single(d, makeFieldFn([=](const auto& x, const auto& t) {
                   return v(x, t) - 2.0 * log((g / 2.0) / (1.0 + exp(x - t)) + h0);
               }),
               makeFieldFn(v));
    }
    return s;
}

void bindRegion(const Scenario& s, int region, double x, double t, bool asTilde, Bindings& b, bool withT) {
    const ModelSpec& m = s.modelSpec();
    const PhysicalFn& f = s.regions.at(region);
    if (withT) {
        JetT phys = f.ft(JetT::varX(x), JetT::varT(t));
        bindJets(m, phys, asTilde, b, true, 4);
    } else {
        JetX phys = f.fx(JetX::varX(x), JetX(t));
        bindJets(m, phys, asTilde, b, false, 6);
    }
}

void bindRegionValues(const Scenario& s, int region, double x, double t, bool asTilde, Bindings& b) {
    JetL phys = s.regions.at(region).fl(JetL::varX(x), JetL(t));
    bindJets(s.modelSpec(), phys, asTilde, b, false, 0);
}

Bindings defectBindings(const Scenario& s, int k, double x, double t, bool withT, std::optional<cplx> prev) {
    Bindings b;
    bindRegion(s, k, x, t, true, b, withT);
    bindRegion(s, k + 1, x, t, false, b, withT);
    const DefectSpec& d = s.defects.at(k);
    bindDefectParams(d, b);
    b.omega = chooseOmega(s.modelSpec(), d, b, prev);
    return b;
}

double pdeResidual(const Scenario& s, int region, double x, double t) {
    const ModelSpec& m = s.modelSpec();
    Bindings b;
    bindRegion(s, region, x, t, false, b, true);
    return std::max(std::abs(b.getT(Base::q) - evaluate(m.eomQ, b)), std::abs(b.getT(Base::r) - evaluate(m.eomR, b)));
}

BacklundCheck checkScenario(const Scenario& s, int samples, unsigned seed) {
    const ModelSpec& m = s.modelSpec();
    BacklundCheck c;
    std::mt19937 rng(seed);
    double lo = std::max(s.xMin, -10.0), hi = std::min(s.xMax, 10.0);
    std::uniform_real_distribution<double> X(lo, hi), T(s.times.front(), s.times.back());
    for (int i = 0; i < samples; ++i) {
        double x = X(rng), t = T(rng);
        for (size_t r = 0; r < s.regions.size(); ++r) c.maxPde = std::max(c.maxPde, pdeResidual(s, static_cast<int>(r), x, t));
        for (size_t k = 0; k < s.defects.size(); ++k) {
            Bindings b = defectBindings(s, static_cast<int>(k), x, t, true);
            auto rx = defectConditionResidualX(m, s.defects[k], b);
            auto rt = defectConditionResidualT(m, s.defects[k], b);
            c.maxX = std::max(c.maxX, rx.fullMax);
            c.maxT = std::max(c.maxT, rt.fullMax);
            c.maxOffX = std::max(c.maxOffX, rx.offDiagonal());
            c.maxDiagX = std::max(c.maxDiagX, rx.diagonal());
            c.maxOffT = std::max(c.maxOffT, rt.offDiagonal());
            c.maxDiagT = std::max(c.maxDiagT, rt.diagonal());
            if (m.reductionClass == ReductionClass::I && s.defects[k].epsilon == -1) {
                cplx du = b.get(FieldSymbol{Base::qt, 0}) - b.get(FieldSymbol{Base::q, 0});
                double beta = s.defects[k].betaOrAlpha;
                if (std::norm(du) > beta * beta * (1 + 1e-12)) c.constraintDiagnostic = true;
            }
        }
    }
    return c;
}

bool admitScenario(const Scenario& s, double pdeTol, double btTol) {
    BacklundCheck c = checkScenario(s);
    return c.maxPde < pdeTol && c.maxX < btTol && c.maxT < btTol;
}

BacklundSolution backlundSolveX(const ModelSpec& m, const DefectSpec& d, const PhysicalFn& seed, double t, double xMin,
                                double xMax, double h, std::optional<std::pair<cplx, cplx>> initial) {
    d.validate();
    if (m.scheme != Scheme::AKNS) throw WrongModel("Backlund integration is built for the AKNS scheme");
    if (!(h > 0) || !(xMax > xMin)) throw InvalidParams("need xMin < xMax and h > 0");
    Bindings pb;
    bindDefectParams(d, pb);
    const cplx ap = pb.get(Param::alphaPlus), am = pb.get(Param::alphaMinus);
    const double sg = d.signBranch;
    const cplx I(0, 1);
    struct SeedVals {
        cplx q, r, qx, rx;
    };
    auto seedAt = [&](double x) {
        GenericJets<JetX> g = toGeneric(m, seed.fx(JetX::varX(x), JetX(t)), false);
        return SeedVals{g.q.value(), g.r.value(), g.q.deriv(1), g.r.deriv(1)};
    };
    using State = std::array<cplx, 3>;
    auto rhs = [&](double x, const State& y) {
        SeedVals s = seedAt(x);
        cplx a1 = (ap + sg * y[2]) / 2.0, a4 = (ap - sg * y[2]) / 2.0;
        return State{s.qx + 2.0 * I * (y[0] * a4 - s.q * a1), s.rx - 2.0 * I * (y[1] * a1 - s.r * a4),
                     I * sg * (y[0] * y[1] - s.q * s.r)};
    };
    SeedVals s0 = seedAt(xMin);
    State y{s0.q, s0.r, 0};
    if (initial) {
        y[0] = initial->first;
        y[1] = initial->second;
    }
    // Omega starts on the root whose linearised mode i(alpha_+ - s Omega)
    // grows with x, so the perturbation decays towards x_min.
    cplx root = std::sqrt(am * am - (y[0] - s0.q) * (y[1] - s0.r));
    y[2] = (I * (ap - sg * root)).real() >= (I * (ap + sg * root)).real() ? root : -root;
    bool watchRadicand = d.cls == DefectClass::I && d.epsilon == -1;

    BacklundSolution out;
    int n = static_cast<int>(std::llround((xMax - xMin) / h));
    auto record = [&](double x, const State& st) {
        for (auto& v : st)
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag()) || std::abs(v) > 1e8)
                throw BlowUp("Backlund integration diverged at x = " + std::to_string(x));
        if (watchRadicand) {
            SeedVals sv = seedAt(x);
            cplx rad = am * am - (st[0] - sv.q) * (st[1] - sv.r);
            if (rad.real() > 1e-12) throw BlowUp("radicand of Omega crossed zero at x = " + std::to_string(x));
        }
        out.xs.push_back(x);
        out.Q.push_back(st[0]);
        out.R.push_back(st[1]);
        out.Omega.push_back(st[2]);
    };
    record(xMin, y);
    for (int i = 0; i < n; ++i) {
        double x = xMin + i * h;
        State k1 = rhs(x, y), y2, y3, y4;
        for (int j = 0; j < 3; ++j) y2[j] = y[j] + 0.5 * h * k1[j];
        State k2 = rhs(x + 0.5 * h, y2);
        for (int j = 0; j < 3; ++j) y3[j] = y[j] + 0.5 * h * k2[j];
        State k3 = rhs(x + 0.5 * h, y3);
        for (int j = 0; j < 3; ++j) y4[j] = y[j] + h * k3[j];
        State k4 = rhs(x + h, y4);
        for (int j = 0; j < 3; ++j) y[j] += h / 6.0 * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]);
        record(xMin + (i + 1) * h, y);
    }
    return out;
}

}  // namespace intdef
