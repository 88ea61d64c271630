#include "intdef/models.hpp"

#include <stdexcept>

namespace intdef {

namespace {

using P = DiffPolynomial;

P q(int k = 0) { return P::field(Base::q, k); }
P r(int k = 0) { return P::field(Base::r, k); }
P c(long long re, long long im = 0) { return P(Gaussian(Rational(re), Rational(im))); }
P c(Rational re, Rational im = Rational()) { return P(Gaussian(re, im)); }

LaurentSeries poly(std::map<int, P> m) { return LaurentSeries::exactPoly(std::move(m)); }

ModelSpec nls(ModelName n, std::string id, int eps) {
    ModelSpec m;
    m.name = n;
    m.id = std::move(id);
    m.scheme = Scheme::AKNS;
    m.reductionClass = ReductionClass::I;
    m.epsilon = eps;
    LaurentSeries A = poly({{2, c(0, -2)}, {0, c(0, -1) * q() * r()}});
    LaurentSeries B = poly({{1, c(2) * q()}, {0, c(0, 1) * q(1)}});
    LaurentSeries C = poly({{1, c(2) * r()}, {0, c(0, -1) * r(1)}});
    m.V = MatrixSeries(A, B, C, -A);
    m.eomQ = c(0, 1) * q(2) + c(0, -2) * q().pow(2) * r();
    m.eomR = c(0, -1) * r(2) + c(0, 2) * q() * r().pow(2);
    m.dispersion = poly({{2, c(0, -2)}});
    return m;
}

// Third AKNS flow: mKdV (r = eps q) and KdV (r = eps).
ModelSpec third(ModelName n, std::string id, ReductionClass cls, int eps) {
    ModelSpec m;
    m.name = n;
    m.id = std::move(id);
    m.scheme = Scheme::AKNS;
    m.reductionClass = cls;
    m.epsilon = eps;
    LaurentSeries A = poly({{3, c(0, -4)}, {1, c(0, -2) * q() * r()}, {0, q(1) * r() - q() * r(1)}});
    LaurentSeries B = poly({{2, c(4) * q()}, {1, c(0, 2) * q(1)}, {0, -q(2) + c(2) * q().pow(2) * r()}});
    LaurentSeries C = poly({{2, c(4) * r()}, {1, c(0, -2) * r(1)}, {0, -r(2) + c(2) * q() * r().pow(2)}});
    m.V = MatrixSeries(A, B, C, -A);
    m.eomQ = -q(3) + c(6) * q() * r() * q(1);
    m.eomR = -r(3) + c(6) * q() * r() * r(1);
    m.dispersion = poly({{3, c(0, -4)}});
    if (cls == ReductionClass::III) m.potential = Potential::kdv;
    return m;
}

ModelSpec sineGordon() {
    ModelSpec m;
    m.name = ModelName::sineGordonLC;
    m.id = "sine-gordon";
    m.reductionClass = ReductionClass::II;
    m.epsilon = -1;
    m.lightCone = true;
    m.potential = Potential::sineGordon;
    P cosv = P::field(Base::cosv), sinv = P::field(Base::sinv);
    P k = c(Rational(0), Rational(1, 4));
    LaurentSeries A = poly({{-1, k * cosv}});
    LaurentSeries B = poly({{-1, k * sinv}});
    m.V = MatrixSeries(A, B, B, -A);
    m.eomQ = c(Rational(-1, 2)) * sinv;
    m.eomR = c(Rational(1, 2)) * sinv;
    m.dispersion = poly({{-1, k}});
    return m;
}

ModelSpec liouville() {
    ModelSpec m;
    m.name = ModelName::LiouvilleLC;
    m.id = "liouville";
    m.reductionClass = ReductionClass::II;
    m.epsilon = 1;
    m.lightCone = true;
    m.potential = Potential::liouville;
    P expv = P::field(Base::expv);
    LaurentSeries A = poly({{-1, c(Rational(0), Rational(1, 2)) * expv}});
    m.V = MatrixSeries(A, -A, A, -A);
    m.eomQ = expv;
    m.eomR = expv;
    m.dispersion = LaurentSeries();
    return m;
}

ModelSpec dnls() {
    ModelSpec m;
    m.name = ModelName::DNLS;
    m.id = "dnls";
    m.scheme = Scheme::KN;
    m.reductionClass = ReductionClass::none;
    m.epsilon = 1;
    LaurentSeries A = poly({{4, c(0, -2)}, {2, c(0, -1) * q() * r()}});
    LaurentSeries B = poly({{3, c(2) * q()}, {1, c(0, 1) * q(1) + q().pow(2) * r()}});
    LaurentSeries C = poly({{3, c(2) * r()}, {1, c(0, -1) * r(1) + q() * r().pow(2)}});
    m.V = MatrixSeries(A, B, C, -A);
    m.eomQ = c(0, 1) * q(2) + totalXDerivative(q().pow(2) * r());
    m.eomR = c(0, -1) * r(2) + totalXDerivative(q() * r().pow(2));
    m.dispersion = poly({{4, c(0, -2)}});
    return m;
}

}  // namespace

std::vector<ModelSpec> registerBuiltinModels() {
    return {nls(ModelName::NLSfocusing, "nls-focusing", -1),
            nls(ModelName::NLSdefocusing, "nls-defocusing", 1),
            third(ModelName::mKdVplus, "mkdv-plus", ReductionClass::II, 1),
            third(ModelName::mKdVminus, "mkdv-minus", ReductionClass::II, -1),
            sineGordon(),
            liouville(),
            third(ModelName::KdVplus, "kdv-plus", ReductionClass::III, 1),
            third(ModelName::KdVminus, "kdv-minus", ReductionClass::III, -1),
            dnls()};
}

const std::vector<ModelSpec>& builtinModels() {
    static const std::vector<ModelSpec> models = registerBuiltinModels();
    return models;
}

const ModelSpec& modelByName(ModelName n) {
    for (auto& m : builtinModels())
        if (m.name == n) return m;
    throw std::out_of_range("model not registered");
}

const ModelSpec& modelById(const std::string& id) {
    for (auto& m : builtinModels())
        if (m.id == id) return m;
    throw std::out_of_range("unknown model '" + id + "'");
}

std::string className(ReductionClass c) {
    switch (c) {
        case ReductionClass::I: return "I";
        case ReductionClass::II: return "II";
        case ReductionClass::III: return "III";
        default: return "none";
    }
}

std::string schemeName(Scheme s) { return s == Scheme::AKNS ? "AKNS" : "KN"; }

DiffPolynomial tildeMap(const DiffPolynomial& p) {
    Substitution s;
    s.field = [](FieldSymbol f) -> std::optional<DiffPolynomial> {
        if (isTilde(f.base)) throw std::invalid_argument("tildeMap on an already tilded polynomial");
        return DiffPolynomial::field(FieldSymbol{tildeOf(f.base), f.order});
    };
    return substitute(p, s);
}

LaurentSeries tildeMap(const LaurentSeries& s) {
    return s.mapCoeffs([](const DiffPolynomial& p) { return tildeMap(p); });
}

MatrixSeries tildeMap(const MatrixSeries& m) {
    return m.mapEntries([](const LaurentSeries& s) { return tildeMap(s); });
}

MatrixSeries laxU(const ModelSpec& m, bool tilde) {
    int w = m.scheme == Scheme::AKNS ? 0 : 1;
    int s = m.scheme == Scheme::AKNS ? 1 : 2;
    Base bq = tilde ? Base::qt : Base::q, br = tilde ? Base::rt : Base::r;
    return MatrixSeries(LaurentSeries::monomial(s, c(0, -1)), LaurentSeries::monomial(w, P::field(bq)),
                        LaurentSeries::monomial(w, P::field(br)), LaurentSeries::monomial(s, c(0, 1)));
}

MatrixSeries laxV(const ModelSpec& m, bool tilde) { return tilde ? tildeMap(m.V) : m.V; }

DiffPolynomial timeDerivative(const ModelSpec& m, const DiffPolynomial& p) {
    DiffPolynomial eq[4] = {m.eomQ, m.eomR, tildeMap(m.eomQ), tildeMap(m.eomR)};
    std::map<FieldSymbol, DiffPolynomial> cache;
    return derivation(p, [&](FieldSymbol f) -> DiffPolynomial {
        if (isAux(f.base)) throw std::invalid_argument("time derivative of " + f.name() + " is nonlocal");
        auto it = cache.find(f);
        if (it != cache.end()) return it->second;
        DiffPolynomial d = totalXDerivative(eq[static_cast<int>(f.base)], f.order);
        cache.emplace(f, d);
        return d;
    });
}

LaurentSeries timeDerivative(const ModelSpec& m, const LaurentSeries& s) {
    return s.mapCoeffs([&](const DiffPolynomial& p) { return timeDerivative(m, p); });
}

DiffPolynomial applyReduction(ReductionClass cls, int eps, const DiffPolynomial& p, bool twist) {
    Substitution s;
    P e(eps);
    switch (cls) {
        case ReductionClass::I:
            s.field = [e](FieldSymbol f) -> std::optional<P> {
                if (f.base == Base::r || f.base == Base::rt) return e * P::field(f);
                return std::nullopt;
            };
            s.param = [](Param x) -> std::optional<P> {
                if (x == Param::alphaMinus) return c(0, -1) * P::param(Param::beta);
                return std::nullopt;
            };
            break;
        case ReductionClass::II:
            s.field = [e](FieldSymbol f) -> std::optional<P> {
                if (f.base == Base::r) return e * P::field(Base::q, f.order);
                if (f.base == Base::rt) return e * P::field(Base::qt, f.order);
                return std::nullopt;
            };
            s.param = [](Param x) -> std::optional<P> {
                if (x == Param::alphaMinus) return c(0, -1) * P::param(Param::alpha);
                if (x == Param::alphaPlus) return P();
                return std::nullopt;
            };
            break;
        case ReductionClass::III:
            s.field = [e, twist](FieldSymbol f) -> std::optional<P> {
                int sg = twist ? -1 : 1;
                if (f.base == Base::r) return f.order == 0 ? e : P();
                if (f.base == Base::rt) return f.order == 0 ? e * P(sg) : P();
                if (f.base == Base::qt) return P(sg) * P::field(f);
                return std::nullopt;
            };
            s.param = [](Param x) -> std::optional<P> {
                if (x == Param::alphaMinus) return c(0, -1) * P::param(Param::beta);
                if (x == Param::alphaPlus) return P();
                return std::nullopt;
            };
            break;
        default:
            throw UnknownClass("model has no reduction class");
    }
    return substitute(p, s);
}

DiffPolynomial applyReduction(const ModelSpec& m, const DiffPolynomial& p, bool twist) {
    return applyReduction(m.reductionClass, m.epsilon, p, twist);
}

DiffPolynomial reductionConjugate(const DiffPolynomial& p, int eps) {
    Substitution s;
    P e(eps);
    s.field = [e](FieldSymbol f) -> std::optional<P> {
        switch (f.base) {
            case Base::q: return e * P::field(Base::r, f.order);
            case Base::r: return e * P::field(Base::q, f.order);
            case Base::qt: return e * P::field(Base::rt, f.order);
            case Base::rt: return e * P::field(Base::qt, f.order);
            default: return std::nullopt;
        }
    };
    s.param = [](Param x) -> std::optional<P> {
        if (x == Param::alphaMinus) return -P::param(x);
        return std::nullopt;
    };
    s.omega = -P::omega();
    return conjugateCoefficients(substitute(p, s));
}

MatrixSeries zeroCurvatureResidual(const ModelSpec& m) {
    int w = m.scheme == Scheme::AKNS ? 0 : 1;
    MatrixSeries U = laxU(m);
    MatrixSeries Ut({}, LaurentSeries::monomial(w, m.eomQ), LaurentSeries::monomial(w, m.eomR), {});
    MatrixSeries Vx = m.V.mapEntries([](const LaurentSeries& s) {
        return s.mapCoeffs([](const DiffPolynomial& p) { return totalXDerivative(p); });
    });
    MatrixSeries res = Ut - Vx + commutator(U, m.V);
    if (m.lightCone)
        res = res.mapEntries([&](const LaurentSeries& s) {
            return s.mapCoeffs([&](const DiffPolynomial& p) { return applyReduction(m, p); });
        });
    return res;
}

bool checkVSymmetry(const ModelSpec& m) {
    const LaurentSeries& B = m.V(0, 1);
    LaurentSeries Cs = m.V(1, 0).mapCoeffs([&](const DiffPolynomial& p) {
        return reductionConjugate(p, m.epsilon).scaled(Gaussian(m.epsilon));
    });
    return B == Cs;
}

bool checkBoundaryBehaviour(const ModelSpec& m) {
    Substitution s;
    s.field = [](FieldSymbol f) -> std::optional<P> {
        switch (f.base) {
            case Base::cosv: case Base::cosvt: case Base::expv: case Base::expvt: return P(1);
            default: return P();
        }
    };
    MatrixSeries v0 = m.V.mapEntries([&](const LaurentSeries& x) {
        return x.mapCoeffs([&](const DiffPolynomial& p) { return substitute(p, s); });
    });
    return v0 == MatrixSeries(m.dispersion, {}, {}, -m.dispersion);
}

namespace {

const char* potentialName(Potential p) {
    switch (p) {
        case Potential::sineGordon: return "sine-gordon";
        case Potential::liouville: return "liouville";
        case Potential::kdv: return "kdv";
        default: return "none";
    }
}

}  // namespace

nlohmann::json modelToJson(const ModelSpec& m) {
    return {{"schema", "intdef.model/1"},
            {"id", m.id},
            {"scheme", schemeName(m.scheme)},
            {"class", className(m.reductionClass)},
            {"epsilon", m.epsilon},
            {"lightCone", m.lightCone},
            {"potential", potentialName(m.potential)},
            {"V", m.V.toJson()},
            {"eom", {{"q", m.eomQ.str()}, {"r", m.eomR.str()}}},
            {"dispersion", m.dispersion.toJson()}};
}

ModelSpec modelFromJson(const nlohmann::json& j) {
    ModelSpec m;
    m.id = j.at("id").get<std::string>();
    bool known = false;
    for (auto& b : builtinModels())
        if (b.id == m.id) {
            m.name = b.name;
            known = true;
        }
    if (!known) throw std::invalid_argument("model file names an unregistered model '" + m.id + "'");
    std::string scheme = j.at("scheme").get<std::string>();
    if (scheme != "AKNS" && scheme != "KN") throw std::invalid_argument("unknown scheme '" + scheme + "'");
    m.scheme = scheme == "AKNS" ? Scheme::AKNS : Scheme::KN;
    std::string cls = j.at("class").get<std::string>();
    m.reductionClass = cls == "I" ? ReductionClass::I : cls == "II" ? ReductionClass::II
                     : cls == "III" ? ReductionClass::III : ReductionClass::none;
    m.epsilon = j.at("epsilon").get<int>();
    m.lightCone = j.at("lightCone").get<bool>();
    std::string pot = j.at("potential").get<std::string>();
    m.potential = pot == "sine-gordon" ? Potential::sineGordon : pot == "liouville" ? Potential::liouville
                : pot == "kdv" ? Potential::kdv : Potential::none;
    m.V = MatrixSeries::fromJson(j.at("V"));
    m.eomQ = DiffPolynomial::parse(j.at("eom").at("q").get<std::string>());
    m.eomR = DiffPolynomial::parse(j.at("eom").at("r").get<std::string>());
    m.dispersion = LaurentSeries::fromJson(j.at("dispersion"));
    return m;
}

}  // namespace intdef
