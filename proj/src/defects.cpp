#include "intdef/defects.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace intdef {

Mat2 matMul(const Mat2& a, const Mat2& b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}
Mat2 matAdd(const Mat2& a, const Mat2& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]}; }
Mat2 matSub(const Mat2& a, const Mat2& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]}; }
Mat2 matScale(const Mat2& a, cplx s) { return {a[0] * s, a[1] * s, a[2] * s, a[3] * s}; }
Mat2 matIdentity() { return {1.0, 0.0, 0.0, 1.0}; }
cplx matDet(const Mat2& a) { return a[0] * a[3] - a[1] * a[2]; }
Mat2 matInverse(const Mat2& a) {
    cplx d = matDet(a);
    return {a[3] / d, -a[1] / d, -a[2] / d, a[0] / d};
}
double matNorm(const Mat2& a) {
    double m = 0;
    for (auto& x : a) m = std::max(m, std::abs(x));
    return m;
}

void DefectSpec::validate() const {
    auto bad = [](const std::string& m) { throw InvalidParams(m); };
    if (signBranch != 1 && signBranch != -1) bad("signBranch must be +1 or -1");
    if (epsilon != 1 && epsilon != -1) bad("epsilon must be +1 or -1");
    if (!std::isfinite(alphaPlus) || !std::isfinite(betaOrAlpha) || !std::isfinite(x0)) bad("non-finite parameter");
    if (cls != DefectClass::I && alphaPlus != 0.0) bad("alpha_plus must vanish for classes II and III");
    if (cls == DefectClass::II && betaOrAlpha == 0.0) bad("class II parameter must be nonzero");
    if (nilpotent && cls != DefectClass::II) bad("nilpotent form exists for class II only");
}

ReductionClass DefectSpec::reductionClass() const {
    switch (cls) {
        case DefectClass::I: return ReductionClass::I;
        case DefectClass::II: return ReductionClass::II;
        default: return ReductionClass::III;
    }
}

MatrixSeries genericDefectMatrix(int s) {
    using P = DiffPolynomial;
    P half(Gaussian(Rational(1, 2)));
    P ap = P::param(Param::alphaPlus), om = P::omega().scaled(Gaussian(s));
    P a1 = half * (ap + om), a4 = half * (ap - om);
    P a2 = P(Gaussian(Rational(0), Rational(-1, 2))) * (P::field(Base::qt) - P::field(Base::q));
    P a3 = P(Gaussian(Rational(0), Rational(1, 2))) * (P::field(Base::rt) - P::field(Base::r));
    auto entry = [](const P& c0, const P& c1) { return LaurentSeries::exactPoly({{0, c0}, {-1, c1}}); };
    return MatrixSeries(entry(P(1), a1), entry(P(), a2), entry(P(), a3), entry(P(1), a4));
}

MatrixSeries buildDefectMatrix(const DefectSpec& d) {
    d.validate();
    MatrixSeries g = genericDefectMatrix(d.signBranch);
    return g.mapEntries([&](const LaurentSeries& x) {
        return x.mapCoeffs([&](const DiffPolynomial& p) {
            return applyReduction(d.reductionClass(), d.epsilon, p, d.sigma3Twist);
        });
    });
}

void bindDefectParams(const DefectSpec& d, Bindings& b) {
    b.set(Param::alphaPlus, d.alphaPlus);
    b.set(Param::alphaMinus, d.nilpotent ? cplx(0) : cplx(0, -d.betaOrAlpha));
    b.set(Param::beta, d.betaOrAlpha);
    b.set(Param::alpha, d.nilpotent ? 0.0 : d.betaOrAlpha);
    b.set(Param::gamma, d.betaOrAlpha);
}

namespace {

struct Fields {
    cplx q, r, Q, R;
};

Fields fieldsOf(const Bindings& b) {
    return {b.get(FieldSymbol{Base::q, 0}), b.get(FieldSymbol{Base::r, 0}), b.get(FieldSymbol{Base::qt, 0}),
            b.get(FieldSymbol{Base::rt, 0})};
}

cplx radicandOf(const Bindings& b) {
    Fields f = fieldsOf(b);
    cplx am = b.get(Param::alphaMinus);
    return am * am - (f.Q - f.q) * (f.R - f.r);
}

// L1 derivative given derivatives of the four fields.
Mat2 l1Derivative(const DefectSpec& d, const Bindings& b, cplx dq, cplx dr, cplx dQ, cplx dR) {
    Fields f = fieldsOf(b);
    cplx om = omegaValue(b);
    cplx drad = -((dQ - dq) * (f.R - f.r) + (f.Q - f.q) * (dR - dr));
    cplx dom = std::abs(om) > 1e-300 ? drad / (2.0 * om) : cplx(0);
    double s = d.signBranch;
    return {s * dom / 2.0, cplx(0, -0.5) * (dQ - dq), cplx(0, 0.5) * (dR - dr), -s * dom / 2.0};
}

std::map<int, Mat2> numericV(const ModelSpec& m, const Bindings& b, bool tilde) {
    std::map<int, Mat2> out;
    MatrixSeries v = laxV(m, tilde);
    for (int k = 0; k < 4; ++k)
        for (auto& [e, c] : v.e[k].coeffs()) {
            auto it = out.try_emplace(e, Mat2{}).first;
            it->second[k] = evaluate(c, b);
        }
    return out;
}

}  // namespace

Mat2 defectL1(const DefectSpec& d, const Bindings& b) {
    Fields f = fieldsOf(b);
    cplx om = omegaValue(b);
    cplx ap = b.get(Param::alphaPlus);
    double s = d.signBranch;
    return {(ap + s * om) / 2.0, cplx(0, -0.5) * (f.Q - f.q), cplx(0, 0.5) * (f.R - f.r), (ap - s * om) / 2.0};
}

Mat2 defectMatrixAt(const DefectSpec& d, const Bindings& b, cplx lambda) {
    return matAdd(matIdentity(), matScale(defectL1(d, b), 1.0 / lambda));
}

ConditionResidual defectConditionResidualX(const ModelSpec& m, const DefectSpec& d, const Bindings& b) {
    if (m.scheme != Scheme::AKNS) throw WrongModel("defect conditions are built for the AKNS scheme");
    Fields f = fieldsOf(b);
    Mat2 L1 = defectL1(d, b);
    Mat2 dL = l1Derivative(d, b, b.get(FieldSymbol{Base::q, 1}), b.get(FieldSymbol{Base::r, 1}),
                           b.get(FieldSymbol{Base::qt, 1}), b.get(FieldSymbol{Base::rt, 1}));
    Mat2 Wt{0.0, f.Q, f.R, 0.0}, W{0.0, f.q, f.r, 0.0};
    Mat2 res = matSub(dL, matSub(matMul(Wt, L1), matMul(L1, W)));
    ConditionResidual out{res[0], res[1], res[2], res[3]};
    out.fullMax = matNorm(res);
    return out;
}

VPolarity polarityOf(const ModelSpec& m) {
    int top = INT_MIN;
    for (auto& x : m.V.e)
        if (auto e = x.maxExponent()) top = std::max(top, *e);
    return top > 0 ? VPolarity::positive : VPolarity::negative;
}

ConditionResidual defectConditionResidualT(const ModelSpec& m, const DefectSpec& d, const Bindings& b, VPolarity family) {
    if (m.scheme != Scheme::AKNS) throw WrongModel("defect conditions are built for the AKNS scheme");
    if (family != VPolarity::automatic && family != polarityOf(m))
        throw WrongPolarity("model " + m.id + " has V polynomial in " +
                            (polarityOf(m) == VPolarity::positive ? std::string("lambda") : std::string("1/lambda")));
    Mat2 L1 = defectL1(d, b);
    Mat2 dL = l1Derivative(d, b, b.getT(Base::q), b.getT(Base::r), b.getT(Base::qt), b.getT(Base::rt));
    auto V = numericV(m, b, false), Vt = numericV(m, b, true);
    int lo = std::min(V.begin()->first, Vt.begin()->first) - 1;
    int hi = std::max(V.rbegin()->first, Vt.rbegin()->first);
    auto at = [](const std::map<int, Mat2>& x, int e) {
        auto it = x.find(e);
        return it == x.end() ? Mat2{} : it->second;
    };
    ConditionResidual out{};
    for (int e = lo; e <= hi; ++e) {
        Mat2 rhs = matAdd(matSub(at(Vt, e), at(V, e)), matSub(matMul(at(Vt, e + 1), L1), matMul(L1, at(V, e + 1))));
        Mat2 res = matSub(e == -1 ? dL : Mat2{}, rhs);
        if (e == -1) {
            out.a1 = res[0];
            out.a2 = res[1];
            out.a3 = res[2];
            out.a4 = res[3];
        }
        out.fullMax = std::max(out.fullMax, matNorm(res));
    }
    return out;
}

cplx chooseOmega(const ModelSpec& m, const DefectSpec& d, Bindings b, std::optional<cplx> previous) {
    cplx root = std::sqrt(radicandOf(b));
    cplx cand[2] = {root, -root};
    double res[2];
    for (int k = 0; k < 2; ++k) {
        b.omega = cand[k];
        res[k] = defectConditionResidualX(m, d, b).offDiagonal();
    }
    double lo = std::min(res[0], res[1]), hi = std::max(res[0], res[1]);
    if (hi > 1e-12 && lo < 0.01 * hi) return res[0] < res[1] ? cand[0] : cand[1];
    if (previous) return std::abs(cand[0] - *previous) <= std::abs(cand[1] - *previous) ? cand[0] : cand[1];
    return static_cast<double>(d.signBranch) * root;
}

double detConstancyWitness(const DefectSpec& d, const std::vector<Bindings>& samples, const std::vector<cplx>& lambdas) {
    double worst = 0;
    for (cplx lam : lambdas) {
        if (samples.empty()) break;
        cplx ref = matDet(defectMatrixAt(d, samples.front(), lam));
        for (auto& b : samples) worst = std::max(worst, std::abs(matDet(defectMatrixAt(d, b, lam)) - ref));
    }
    return worst;
}

ProjectorForm projectorDecompose(const DefectSpec& d) {
    d.validate();
    if (d.nilpotent || d.betaOrAlpha == 0.0) throw DegenerateEigenvalues("alpha_1 = alpha_2");
    using P = DiffPolynomial;
    P half(Gaussian(Rational(1, 2)));
    P ap = P::param(Param::alphaPlus), am = P::param(Param::alphaMinus);
    ProjectorForm pf;
    pf.alpha1 = half * (ap + am);
    pf.alpha2 = half * (ap - am);
    pf.denominator = pf.alpha2 - pf.alpha1;
    MatrixSeries L = genericDefectMatrix(d.signBranch);
    std::array<P, 4> n;
    for (int k = 0; k < 4; ++k) n[k] = L.e[k].coeff(-1);
    n[0] -= pf.alpha1;
    n[3] -= pf.alpha1;
    auto reduce = [&](const P& x) { return applyReduction(d.reductionClass(), d.epsilon, x, d.sigma3Twist); };
    bool ok = true;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            P sq = n[2 * i] * n[j] + n[2 * i + 1] * n[2 + j];
            P lin = pf.denominator * n[2 * i + j];
            ok = ok && (sq - lin).isZero() && reduce(sq - lin).isZero();
        }
    pf.idempotent = ok;
    for (auto& x : n) x = reduce(x);
    pf.N = n;
    pf.alpha1 = reduce(pf.alpha1);
    pf.alpha2 = reduce(pf.alpha2);
    pf.denominator = reduce(pf.denominator);
    return pf;
}

Mat2 projectorInverse(const DefectSpec& d, const Bindings& b, cplx lambda) {
    cplx ap = b.get(Param::alphaPlus), am = b.get(Param::alphaMinus);
    cplx a1 = (ap + am) / 2.0, a2 = (ap - am) / 2.0;
    if (std::abs(a2 - a1) == 0.0) throw DegenerateEigenvalues("alpha_1 = alpha_2");
    Mat2 P = matScale(matSub(defectL1(d, b), matScale(matIdentity(), a1)), 1.0 / (a2 - a1));
    Mat2 inner = matSub(matIdentity(), matScale(P, (a2 - a1) / (lambda + a2)));
    return matScale(inner, lambda / (lambda + a1));
}

MultiDefectSpec composeDefects(std::vector<DefectSpec> ds) {
    for (auto& d : ds) d.validate();
    for (std::size_t k = 1; k < ds.size(); ++k)
        if (!(ds[k - 1].x0 < ds[k].x0)) throw OverlappingDefects("defect locations must be strictly increasing");
    return MultiDefectSpec{std::move(ds)};
}

}  // namespace intdef
