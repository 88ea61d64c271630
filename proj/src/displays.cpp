#include "intdef/displays.hpp"

#include <map>
#include <mutex>

namespace intdef {

namespace {

using P = DiffPolynomial;

P fq(int k = 0) { return P::field(Base::q, k); }
P fr(int k = 0) { return P::field(Base::r, k); }
P fQ(int k = 0) { return P::field(Base::qt, k); }
P fR(int k = 0) { return P::field(Base::rt, k); }
P num(long long a, long long b = 1) { return P(Gaussian(Rational(a, b))); }
P imag(long long a, long long b = 1) { return P(Gaussian(Rational(0), Rational(a, b))); }
P prm(Param p, int k = 1) { return P::param(p, k); }

// Omega_eps = -i Omega
P omegaEps() { return P::omega().scaled(Gaussian(Rational(0), Rational(-1))); }

std::vector<DisplayCharge> buildDisplays() {
    std::vector<DisplayCharge> out;
    auto add = [&](ModelName m, int n, std::string label, P bulk, P defect) -> DisplayCharge& {
        DisplayCharge d;
        d.model = m;
        d.order = n;
        d.label = std::move(label);
        d.bulk = std::move(bulk);
        d.defect = std::move(defect);
        out.push_back(std::move(d));
        return out.back();
    };

    // NLS, class I
    for (auto name : {ModelName::NLSfocusing, ModelName::NLSdefocusing}) {
        const ModelSpec& m = modelByName(name);
        P rad = reducedRadicand(m);
        auto mul = [&](const P& a, const P& b) { return P::mul(a, b, rad); };
        P e(m.epsilon), W = omegaEps(), ap = prm(Param::alphaPlus);
        add(name, 1, "number", fq() * fr(), -(e * W));
        add(name, 2, "momentum", imag(1) * (fq() * fr(1) - fr() * fq(1)),
            imag(-1) * (fr() * fQ() - fq() * fR()) - num(2) * e * ap * W);
        P W3 = mul(mul(W, W), W);
        add(name, 3, "energy", fq(1) * fr(1) + e * fq().pow(2) * fr().pow(2),
            -mul(W, fQ() * fR() + fq() * fr()) - e.scaled(Gaussian(Rational(1, 3))) * (num(3) * ap.pow(2) * W - W3) -
                imag(1) * ap * (fQ() * fr() - fq() * fR()));
    }

    // mKdV, class II
    for (auto name : {ModelName::mKdVplus, ModelName::mKdVminus}) {
        const ModelSpec& m = modelByName(name);
        P rad = reducedRadicand(m);
        auto mul = [&](const P& a, const P& b) { return P::mul(a, b, rad); };
        P e(m.epsilon), W = omegaEps(), a = prm(Param::alpha);
        add(name, 1, "mass", fq().pow(2), -(e * W));
        add(name, 2, "momentum", fq() * fq(1), num(-1, 2) * (fQ().pow(2) - fq().pow(2) + a.pow(2))).constantAllowed = true;
        add(name, 3, "energy", fq(1).pow(2) + e * fq().pow(4),
            -mul(W, fQ().pow(2) + fq().pow(2) - e.scaled(Gaussian(Rational(1, 3))) * mul(W, W)));
    }

    // sine-Gordon in light-cone form, v_x = -2q; Omega_eps = alpha cos((v~+v)/2)
    {
        P W = omegaEps(), a = prm(Param::alpha);
        add(ModelName::sineGordonLC, 1, "(1/4) v_x^2", fq().pow(2), W);
        auto& d2 = add(ModelName::sineGordonLC, 2, "collapse", P(), P());
        d2.kappa = Gaussian(1);
        d2.constantAllowed = true;
        add(ModelName::sineGordonLC, 3, "(1/2)(-v_xx^2 + v_x^4/4)", num(-2) * fq(1).pow(2) + num(2) * fq().pow(4),
            num(1, 3) * P::mul(W, num(4) * (fQ().pow(2) + fQ() * fq() + fq().pow(2)) + num(2) * a.pow(2),
                               reducedRadicand(modelByName(ModelName::sineGordonLC))));
    }

    // Liouville, u = v_x/2; gamma e^{(v~+v)/2} = 2(q~ - q) on shell
    {
        auto L = ModelName::LiouvilleLC;
        auto& d1 = add(L, 1, "(1/2) v_x^2", num(2) * fq().pow(2), num(-2) * (fQ() - fq()));
        d1.edgeRight = num(-2) * fq();
        d1.edgeLeft = num(2) * fQ();
        auto& d2 = add(L, 2, "boundary only", P(), P());
        d2.edgeRight = num(4) * fq().pow(2) - num(4) * fq(1);
        d2.edgeLeft = -(num(4) * fQ().pow(2) - num(4) * fQ(1));
        auto& d3 = add(L, 3, "(1/2)(v_xx^2 + v_x^4/4)", num(2) * fq(1).pow(2) + num(2) * fq().pow(4),
                       num(-4, 3) * (fQ().pow(3) - fq().pow(3)));
        P right = num(2) * fq(2) - num(4, 3) * fq().pow(3) - num(4) * fq() * fq(1);
        d3.edgeRight = right;
        d3.edgeLeft = -tildeMap(right);
    }

    // KdV, class III; Omega_eps^2 = beta^2 + 2 eps (u~ + u)
    for (auto name : {ModelName::KdVplus, ModelName::KdVminus}) {
        const ModelSpec& m = modelByName(name);
        P e(m.epsilon), W = omegaEps(), b = prm(Param::beta);
        add(name, 3, "(1/2) u^2", num(1, 2) * fq().pow(2),
            num(-1, 6) * P::mul(W, e * (fQ() + fq()) - b.pow(2), reducedRadicand(m)));
    }
    return out;
}

// Leading coefficient ratio num/den with exact verification.
std::optional<Gaussian> exactRatio(const P& numer, const P& den) {
    if (den.isZero()) return std::nullopt;
    const Term& t = den.terms().front();
    for (const Term& u : numer.terms())
        if (u.mono == t.mono) {
            Gaussian k = u.coeff * t.coeff.inverse();
            if (numer == den.scaled(k)) return k;
            return std::nullopt;
        }
    return std::nullopt;
}

P reduce(const ModelSpec& m, const P& p) {
    P out = applyReduction(m, p);
    if (m.name == ModelName::LiouvilleLC) out = liouvilleCollapse(out);
    return out;
}

}  // namespace

DiffPolynomial reducedRadicand(const ModelSpec& m) { return applyReduction(m, defaultRadicand()); }

DiffPolynomial liouvilleCollapse(const DiffPolynomial& p) {
    Substitution s;
    s.field = [](FieldSymbol) -> std::optional<P> { return std::nullopt; };
    s.param = [](Param x) -> std::optional<P> {
        if (x == Param::alpha) return P();
        return std::nullopt;
    };
    s.omega = imag(1) * (fQ() - fq());
    s.radicand = -(fQ() - fq()).pow(2);
    return substitute(p, s);
}

DiffPolynomial onShellBacklund(const ModelSpec& m, int sgn, const DiffPolynomial& p) {
    P rad = reducedRadicand(m);
    P half = num(1, 2), S(sgn), twoI = imag(2);
    P a1 = half * (prm(Param::alphaPlus) + S * P::omega());
    P a4 = half * (prm(Param::alphaPlus) - S * P::omega());
    P Qx = fq(1) + twoI * (fQ() * a4 - fq() * a1);
    P Rx = fr(1) - twoI * (fR() * a1 - fr() * a4);

    std::map<Base, P> rule;
    auto learn = [&](Base gen, const P& image) {
        P g = applyReduction(m, P::field(gen, 1));
        if (g.terms().size() != 1) return;
        const Term& t = g.terms().front();
        if (t.mono.fields.size() != 1 || t.mono.fields[0].second != 1 || t.mono.omega) return;
        Base target = t.mono.fields[0].first.base;
        if (rule.count(target)) return;
        rule[target] = applyReduction(m, image).scaled(t.coeff.inverse());
    };
    learn(Base::qt, Qx);
    learn(Base::rt, Rx);

    Substitution s;
    s.field = [&](FieldSymbol f) -> std::optional<P> {
        if (!isTilde(f.base) || isAux(f.base) || f.order == 0) return std::nullopt;
        if (f.order > 1) throw OrderUnavailable("on-shell substitution covers first tilde derivatives only");
        auto it = rule.find(f.base);
        if (it == rule.end()) throw OrderUnavailable("no Backlund rule for " + f.name());
        return it->second;
    };
    s.param = [](Param) -> std::optional<P> { return std::nullopt; };
    s.radicand = rad;
    return substitute(p, s);
}

const std::vector<DisplayCharge>& referenceDisplays() {
    static const std::vector<DisplayCharge> d = buildDisplays();
    return d;
}

const DisplayCharge& referenceDisplay(ModelName m, int order) {
    for (auto& d : referenceDisplays())
        if (d.model == m && d.order == order) return d;
    throw OrderUnavailable("no reference display for " + modelByName(m).id + " at order " + std::to_string(order));
}

MatchResult matchDisplay(const DisplayCharge& D, int sgn) {
    const ModelSpec& m = modelByName(D.model);
    bool liouville = m.name == ModelName::LiouvilleLC;
    if (sgn != 1 && sgn != -1) throw InvalidParams("signBranch must be +1 or -1");
    if (liouville && sgn != 1) throw InvalidParams("the Liouville collapse is taken on the upper sheet");
    MatchResult res;
    int n = D.order;

    P c = bulkDensity(m, n);
    DefectSpec ds;
    ds.signBranch = sgn;
    P d = defectExpansion(m, ds, n).back();
    if (m.reductionClass == ReductionClass::I) {
        c = symmetrizeCoefficient(c, m.epsilon);
        d = symmetrizeCoefficient(d, m.epsilon);
    }
    P cR = reduce(m, c), dR = applyReduction(m, d);

    // displays are stated for the upper sheet
    P dispDefect = D.defect;
    if (sgn == -1) {
        Substitution flip;
        flip.field = [](FieldSymbol) -> std::optional<P> { return std::nullopt; };
        flip.param = [](Param) -> std::optional<P> { return std::nullopt; };
        flip.omega = -P::omega();
        flip.radicand = reducedRadicand(m);
        dispDefect = substitute(dispDefect, flip);
    }

    // normalization
    std::optional<Gaussian> kappa = D.kappa;
    if (!kappa) {
        P ec = eulerOperator(cR, Base::q), ed = eulerOperator(D.bulk, Base::q);
        P ecr = eulerOperator(cR, Base::r), edr = eulerOperator(D.bulk, Base::r);
        if (!ec.isZero() || !ecr.isZero()) {
            kappa = !ec.isZero() ? exactRatio(ed, ec) : exactRatio(edr, ecr);
            if (kappa && !(edr == ecr.scaled(*kappa) && ed == ec.scaled(*kappa))) kappa.reset();
        } else if (!D.bulk.isZero()) {
            kappa = exactRatio(D.bulk, cR);
        } else if (D.edgeRight) {
            // right edge group: kappa (l_n + int c) - int(bulk)
            P ell = reduce(m, liouvilleLogSeries(n).back());
            kappa = exactRatio(*D.edgeRight + integrateX(D.bulk), ell + integrateX(cR));
        }
    }
    if (!kappa) {
        res.detail = "no consistent normalization";
        return res;
    }
    res.kappa = *kappa;

    P rem = D.bulk - cR.scaled(*kappa);
    res.F = integrateX(rem);
    if (totalXDerivative(res.F) != rem) {
        res.detail = "bulk display differs from the density by a non-exact term";
        return res;
    }
    P total = dR.scaled(*kappa) + res.F - tildeMap(res.F);
    P shell = onShellBacklund(m, sgn, total);
    if (liouville) shell = liouvilleCollapse(shell);
    res.defectOnShell = shell;
    res.difference = shell - dispDefect;
    bool ok = res.difference.isZero() || (D.constantAllowed && res.difference.isConstant());
    if (!ok) res.detail = "defect group differs by " + res.difference.str();

    if (liouville) {
        P ell = reduce(m, liouvilleLogSeries(n).back());
        res.edgeRight = ell.scaled(*kappa) - res.F;
        res.edgeLeft = -tildeMap(*res.edgeRight);
        if (D.edgeRight && *res.edgeRight != *D.edgeRight) {
            ok = false;
            res.detail += " right edge differs: " + (*res.edgeRight - *D.edgeRight).str();
        }
        if (D.edgeLeft && *res.edgeLeft != *D.edgeLeft) {
            ok = false;
            res.detail += " left edge differs: " + (*res.edgeLeft - *D.edgeLeft).str();
        }
    }
    res.ok = ok;
    return res;
}

Gaussian displayNormalization(ModelName mn, int order) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, Gaussian> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(static_cast<int>(mn), order);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    Gaussian k(1);
    for (auto& d : referenceDisplays())
        if (d.model == mn && d.order == order) {
            auto r = matchDisplay(d, 1);
            if (r.ok) k = r.kappa;
        }
    cache[key] = k;
    return k;
}

}  // namespace intdef
