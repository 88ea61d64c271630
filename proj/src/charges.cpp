#include "intdef/charges.hpp"

#include <map>
#include <mutex>

namespace intdef {

namespace {

using P = DiffPolynomial;

void requireScheme(const ModelSpec& m, Scheme s) {
    if (m.scheme != s) throw WrongModel(m.id + " is not in the " + schemeName(s) + " scheme");
}

LaurentSeries reducedIfLightCone(const ModelSpec& m, const LaurentSeries& s) {
    if (!m.lightCone) return s;
    return s.mapCoeffs([&](const P& p) { return applyReduction(m, p); });
}

// Generic Gamma recursions are model independent within a scheme; cache them.
std::vector<P> aknsGammas(int N) {
    static std::mutex mu;
    static std::vector<P> cache;
    std::lock_guard<std::mutex> lock(mu);
    if (cache.empty()) cache.push_back(-P::field(Base::r));
    while (static_cast<int>(cache.size()) < N) {
        int n = static_cast<int>(cache.size());  // computing Gamma_{n+1}
        P sum;
        for (int k = 1; k <= n - 1; ++k) sum += cache[k - 1] * cache[n - k - 1];
        cache.push_back(totalXDerivative(cache[n - 1]) + P::field(Base::q) * sum);
    }
    return std::vector<P>(cache.begin(), cache.begin() + N);
}

std::vector<P> knGammas(int N) {
    static std::mutex mu;
    static std::vector<P> cache;
    std::lock_guard<std::mutex> lock(mu);
    if (cache.empty()) cache.push_back(-P::field(Base::r));
    while (static_cast<int>(cache.size()) < N + 1) {
        int n = static_cast<int>(cache.size()) - 1;  // computing Gamma_{n+1}
        P sum;
        for (int p = 0; p <= n; ++p) sum += cache[p] * cache[n - p];
        cache.push_back(totalXDerivative(cache[n]).scaled(Gaussian(Rational(0), Rational(2))) + P::field(Base::q) * sum);
    }
    return std::vector<P>(cache.begin(), cache.begin() + N + 1);
}

void checkOrder(const ModelSpec& m, int n) {
    int lo = m.scheme == Scheme::AKNS ? 1 : 0;
    if (n < lo || n > kMaxChargeOrder)
        throw OrderUnavailable("order " + std::to_string(n) + " outside [" + std::to_string(lo) + ", " +
                               std::to_string(kMaxChargeOrder) + "]");
}

int vTop(const ModelSpec& m) {
    int top = 0;
    for (auto& x : m.V.e)
        if (auto e = x.maxExponent()) top = std::max(top, *e);
    return top;
}

}  // namespace

std::vector<DiffPolynomial> gammaExpandAKNS(const ModelSpec& m, int N) {
    requireScheme(m, Scheme::AKNS);
    if (N < 1) return {};
    return aknsGammas(N);
}

std::vector<DiffPolynomial> gammaExpandKN(const ModelSpec& m, int N) {
    requireScheme(m, Scheme::KN);
    if (N < 0) return {};
    return knGammas(N);
}

Gaussian gammaNormalization(const ModelSpec& m, int n) {
    return m.scheme == Scheme::AKNS ? Gaussian::twoIPow(-n) : Gaussian::twoIPow(-(2 * n + 1));
}

LaurentSeries gammaSeries(const ModelSpec& m, int N, bool tilde) {
    std::map<int, P> c;
    if (m.scheme == Scheme::AKNS) {
        auto g = gammaExpandAKNS(m, N);
        for (int n = 1; n <= N; ++n) c[-n] = g[n - 1].scaled(gammaNormalization(m, n));
        LaurentSeries s = LaurentSeries::truncated(std::move(c), N);
        return tilde ? tildeMap(s) : s;
    }
    auto g = gammaExpandKN(m, N);
    for (int n = 0; n <= N; ++n) c[-(2 * n + 1)] = g[n].scaled(gammaNormalization(m, n));
    LaurentSeries s = LaurentSeries::truncated(std::move(c), 2 * N + 2, Parity::odd);
    return tilde ? tildeMap(s) : s;
}

LaurentSeries riccatiResidual(const ModelSpec& m, const LaurentSeries& G, RiccatiKind which, bool useEom) {
    auto lam = [](int e, const P& c) { return LaurentSeries::monomial(e, c); };
    P q = P::field(Base::q), r = P::field(Base::r);
    P twoI(Gaussian(Rational(0), Rational(2)));
    LaurentSeries G2 = G * G;
    LaurentSeries res;
    if (which == RiccatiKind::x) {
        LaurentSeries Gx = G.mapCoeffs([](const P& p) { return totalXDerivative(p); });
        if (m.scheme == Scheme::AKNS)
            res = Gx - lam(1, twoI) * G - LaurentSeries(r) + G2.scaled(q);
        else
            res = Gx - lam(1, r) - lam(2, twoI) * G + lam(1, q) * G2;
    } else {
        LaurentSeries Gt = useEom ? timeDerivative(m, G) : G.truncatedTo(G.truncOrder()).mapCoeffs([](const P&) { return P(); });
        const LaurentSeries &A = m.V(0, 0), &B = m.V(0, 1), &C = m.V(1, 0);
        res = Gt - C + (A * G).scaled(P(2)) + B * G2;
        res = reducedIfLightCone(m, res);
    }
    return res;
}

DiffPolynomial bulkDensity(const ModelSpec& m, int n) {
    checkOrder(m, n);
    if (m.scheme == Scheme::AKNS) return P::field(Base::q) * gammaSeries(m, n).coeff(-n);
    return P::field(Base::q) * gammaSeries(m, n).coeff(-(2 * n + 1));
}

DiffPolynomial bulkFlux(const ModelSpec& m, int n) {
    checkOrder(m, n);
    const LaurentSeries &A = m.V(0, 0), &B = m.V(0, 1);
    int top = std::max(1, vTop(m));
    if (m.scheme == Scheme::AKNS) {
        LaurentSeries G = gammaSeries(m, n + top);
        return (B * G + A).coeff(-n);
    }
    LaurentSeries G = gammaSeries(m, n + top);
    return (B * G + A).coeff(-2 * n);
}

DiffPolynomial verifyBulkConservation(const ModelSpec& m, int n) {
    P res = timeDerivative(m, bulkDensity(m, n)) - totalXDerivative(bulkFlux(m, n));
    if (m.lightCone) res = applyReduction(m, res);
    return res;
}

std::vector<DiffPolynomial> defectExpansion(const ModelSpec& m, const MatrixSeries& L, int N) {
    requireScheme(m, Scheme::AKNS);
    if (N < 1) return {};
    LaurentSeries G = gammaSeries(m, N);
    LaurentSeries S = L(0, 0) + mulTruncated(L(0, 1), G, N);
    LaurentSeries lg = seriesLog(S, N);
    std::vector<P> out;
    for (int n = 1; n <= N; ++n) out.push_back(-lg.coeff(-n));
    return out;
}

std::vector<DiffPolynomial> defectExpansion(const ModelSpec& m, const DefectSpec& d, int N) {
    d.validate();
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::vector<P>> cache;  // (sign, N)
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(d.signBranch, N);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, defectExpansion(m, genericDefectMatrix(d.signBranch), N)).first;
    return it->second;
}

DiffPolynomial symmetrizeCoefficient(const DiffPolynomial& c, int eps) {
    return (c - reductionConjugate(c, eps)).scaled(Gaussian::I());
}

ChargeSeries chargeSeries(const ModelSpec& m, const DefectSpec& d, int n) {
    ChargeSeries cs;
    cs.order = n;
    cs.bulkDensityRight = bulkDensity(m, n);
    cs.bulkDensityLeft = tildeMap(cs.bulkDensityRight);
    cs.flux = bulkFlux(m, n);
    cs.defectTerm = defectExpansion(m, d, n).back();
    return cs;
}

SymmetrizedCharge symmetrize(const ModelSpec& m, const ChargeSeries& cs) {
    if (m.reductionClass != ReductionClass::I) throw WrongClass(m.id + " is not a class I model");
    SymmetrizedCharge s;
    s.base = cs;
    s.densityRight = symmetrizeCoefficient(cs.bulkDensityRight, m.epsilon);
    s.densityLeft = symmetrizeCoefficient(cs.bulkDensityLeft, m.epsilon);
    s.defectTerm = symmetrizeCoefficient(cs.defectTerm, m.epsilon);
    return s;
}

std::vector<DiffPolynomial> liouvilleLogSeries(int N) {
    if (N < 1) return {};
    LaurentSeries G = gammaSeries(modelByName(ModelName::LiouvilleLC), N);
    LaurentSeries lg = seriesLog(LaurentSeries(P(1)).truncatedTo(N) - G, N);
    std::vector<P> out;
    for (int n = 1; n <= N; ++n) out.push_back(lg.coeff(-n));
    return out;
}

std::vector<cplx> liouvilleBoundaryTerms(const ModelSpec& m, const Bindings& rightEdge, const Bindings& leftEdge, int N) {
    if (m.name != ModelName::LiouvilleLC) throw WrongModel("boundary series belong to the Liouville model");
    auto ln = liouvilleLogSeries(N);
    std::vector<cplx> out;
    for (auto& c : ln) out.push_back(evaluate(c, rightEdge) - evaluate(tildeMap(c), leftEdge));
    return out;
}

}  // namespace intdef
