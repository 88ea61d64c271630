#include "intdef/harness.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace intdef {

namespace {

using P = DiffPolynomial;

int nodeOf(const Scenario& s, double x) {
    double k = (x - s.xMin) / s.h;
    long long i = std::llround(k);
    if (std::abs(k - static_cast<double>(i)) > 1e-9 || i < 1 || x >= s.xMax)
        throw InvalidParams("x0 = " + formatDouble(x) + " is not an interior grid node");
    return static_cast<int>(i);
}

std::vector<P> symmetrizeAll(std::vector<P> v, const ModelSpec& m) {
    for (auto& p : v) p = symmetrizeCoefficient(p, m.epsilon);
    return v;
}

Mat2 rk4Transition(const ModelSpec& m, bool tilde, const std::function<void(double, Bindings&)>& bind, double x, double y,
                   cplx lambda, int n) {
    MatrixSeries U = laxU(m, tilde);
    auto Uat = [&](double z) {
        Bindings b;
        bind(z, b);
        return laxMatrixAt(U, b, lambda);
    };
    double h = (y - x) / n;
    Mat2 T = matIdentity();
    Mat2 Ua = Uat(x);
    for (int i = 0; i < n; ++i) {
        double z = x + i * h;
        Mat2 Um = Uat(z + 0.5 * h), Ub = Uat(i + 1 == n ? y : z + h);
        Mat2 k1 = matMul(Ua, T);
        Mat2 k2 = matMul(Um, matAdd(T, matScale(k1, 0.5 * h)));
        Mat2 k3 = matMul(Um, matAdd(T, matScale(k2, 0.5 * h)));
        Mat2 k4 = matMul(Ub, matAdd(T, matScale(k3, h)));
        T = matAdd(T, matScale(matAdd(matAdd(k1, k4), matScale(matAdd(k2, k3), 2.0)), h / 6.0));
        Ua = Ub;
    }
    return T;
}

}  // namespace

GridState makeGrid(const Scenario& s, double t) {
    if (!(s.h > 0) || !(s.xMax > s.xMin)) throw InvalidParams("grid needs x_min < x_max and h > 0");
    GridState g;
    g.h = s.h;
    g.t = t;
    long long n = std::llround((s.xMax - s.xMin) / s.h);
    if (std::abs((s.xMax - s.xMin) / s.h - static_cast<double>(n)) > 1e-9)
        throw InvalidParams("x_max - x_min must be a multiple of h");
    for (long long i = 0; i <= n; ++i) g.xs.push_back(s.xMin + static_cast<double>(i) * s.h);
    for (auto& d : s.defects) g.defectIndex.push_back(nodeOf(s, d.x0));
    return g;
}

cplx simpson(const std::vector<cplx>& f, int i0, int i1, double h) {
    int n = i1 - i0;
    if (n <= 0) return 0;
    if (n == 1) return 0.5 * h * (f[i0] + f[i1]);
    cplx acc = 0;
    int end = n % 2 == 0 ? i1 : i1 - 3;
    if (end > i0) {
        cplx s = f[i0] + f[end];
        for (int i = i0 + 1; i < end; ++i) s += (i - i0) % 2 == 1 ? 4.0 * f[i] : 2.0 * f[i];
        acc += s * (h / 3.0);
    }
    if (end != i1) acc += (3.0 * h / 8.0) * (f[end] + 3.0 * f[end + 1] + 3.0 * f[end + 2] + f[i1]);
    return acc;
}

cplx ChargeRow::bulkSum() const {
    cplx s = 0;
    for (auto& b : bulk) s += b;
    return s;
}

cplx ChargeRow::defectSum() const {
    cplx s = 0;
    for (auto& d : defect) s += d;
    return s;
}

ChargeReport computeCharges(const Scenario& s, const ChargeOptions& opt) {
    const ModelSpec& m = s.modelSpec();
    if (m.scheme != Scheme::AKNS) throw WrongModel("charge quadrature is built for the AKNS scheme");
    ChargeReport rep;
    rep.model = m.id;
    rep.scenario = s.name;
    rep.regions = static_cast<int>(s.regions.size());
    int N = opt.maxOrder;
    if (N < 1) return rep;
    if (N > kMaxChargeOrder) throw OrderUnavailable("order above " + std::to_string(kMaxChargeOrder));
    bool sym = opt.symmetrize && m.reductionClass == ReductionClass::I;
    bool liouville = m.name == ModelName::LiouvilleLC;

    std::vector<P> dens;
    for (int n = 1; n <= N; ++n) dens.push_back(bulkDensity(m, n));
    if (sym) dens = symmetrizeAll(dens, m);
    std::vector<std::vector<P>> defs;
    for (auto& d : s.defects) defs.push_back(sym ? symmetrizeAll(defectExpansion(m, d, N), m) : defectExpansion(m, d, N));
    std::vector<P> ell = liouville ? liouvilleLogSeries(N) : std::vector<P>{};
    std::vector<cplx> kap;
    for (int n = 1; n <= N; ++n) {
        Gaussian k = opt.normalize ? displayNormalization(m.name, n) : Gaussian(1);
        rep.kappa[n] = k;
        kap.push_back(k.toComplex());
    }

    std::vector<std::optional<cplx>> prevOmega(s.defects.size());
    std::vector<std::vector<ChargeRow>> byOrder(N);
    for (double t : s.times) {
        GridState g = makeGrid(s, t);
        int last = static_cast<int>(g.xs.size()) - 1;
        if (s.decaying) {
            auto edge = [&](int region, double x) {
                Bindings b;
                bindRegionValues(s, region, x, t, false, b);
                return std::max(std::abs(b.get(FieldSymbol{Base::q, 0})), std::abs(b.get(FieldSymbol{Base::r, 0})));
            };
            // class III carries r = eps everywhere; only q decays there
            auto edgeQ = [&](int region, double x) {
                Bindings b;
                bindRegionValues(s, region, x, t, false, b);
                return std::abs(b.get(FieldSymbol{Base::q, 0}));
            };
            bool c3 = m.reductionClass == ReductionClass::III;
            double tail = c3 ? std::max(edgeQ(0, s.xMin), edgeQ(rep.regions - 1, s.xMax))
                             : std::max(edge(0, s.xMin), edge(rep.regions - 1, s.xMax));
            if (tail > opt.edgeTolerance)
                throw QuadratureUnderflow("field magnitude " + formatDouble(tail) + " at the domain edge at t = " +
                                          formatDouble(t) + "; widen [x_min, x_max]");
        }
        std::vector<int> cuts{0};
        for (int i : g.defectIndex) cuts.push_back(i);
        cuts.push_back(last);

        std::vector<std::vector<cplx>> bulk(N, std::vector<cplx>(rep.regions));
        std::vector<std::vector<cplx>> vals(N, std::vector<cplx>(g.xs.size()));
        for (int k = 0; k < rep.regions; ++k) {
            for (int i = cuts[k]; i <= cuts[k + 1]; ++i) {
                Bindings b;
                bindRegion(s, k, g.xs[i], t, false, b);
                for (int n = 0; n < N; ++n) vals[n][i] = evaluate(dens[n], b);
            }
            for (int n = 0; n < N; ++n) bulk[n][k] = simpson(vals[n], cuts[k], cuts[k + 1], g.h);
        }
        std::vector<std::vector<cplx>> dv(N, std::vector<cplx>(s.defects.size()));
        for (size_t k = 0; k < s.defects.size(); ++k) {
            Bindings b = defectBindings(s, static_cast<int>(k), s.defects[k].x0, t, false, prevOmega[k]);
            prevOmega[k] = b.omega;
            for (int n = 0; n < N; ++n) dv[n][k] = evaluate(defs[k][n], b);
        }
        std::vector<cplx> bnd(N, 0.0);
        if (liouville) {
            Bindings right, left;
            bindRegion(s, rep.regions - 1, s.xMax, t, false, right);
            bindRegion(s, 0, s.xMin, t, true, left);
            for (int n = 0; n < N; ++n) bnd[n] = evaluate(ell[n], right) - evaluate(tildeMap(ell[n]), left);
        }
        for (int n = 0; n < N; ++n) {
            ChargeRow row;
            row.order = n + 1;
            row.t = t;
            for (auto& x : bulk[n]) row.bulk.push_back(kap[n] * x);
            for (auto& x : dv[n]) row.defect.push_back(kap[n] * x);
            row.boundary = kap[n] * bnd[n];
            row.total = row.bulkSum() + row.defectSum() + row.boundary;
            byOrder[n].push_back(std::move(row));
        }
    }
    for (int n = 0; n < N; ++n) {
        double d = 0;
        if (!byOrder[n].empty()) {
            cplx t0 = byOrder[n].front().total;
            for (auto& r : byOrder[n]) d = std::max(d, std::abs(r.total - t0) / std::max(1.0, std::abs(t0)));
        }
        rep.drift[n + 1] = d;
        for (auto& r : byOrder[n]) rep.rows.push_back(r);
    }
    return rep;
}

Mat2 laxMatrixAt(const MatrixSeries& M, const Bindings& b, cplx lambda) {
    Mat2 out{};
    for (int k = 0; k < 4; ++k)
        for (auto& [e, c] : M.e[k].coeffs()) out[k] += evaluate(c, b) * std::pow(lambda, e);
    return out;
}

TransitionResult transitionMatrix(const ModelSpec& m, bool tilde, const std::function<void(double, Bindings&)>& bind,
                                  double x, double y, cplx lambda, double h, double tol) {
    if (!(y > x)) throw InvalidParams("transition matrix needs x < y");
    if (!(h > 0)) throw InvalidParams("step must be positive");
    int n = std::max(1, static_cast<int>(std::ceil((y - x) / h - 1e-9)));
    Mat2 coarse = rk4Transition(m, tilde, bind, x, y, lambda, n);
    Mat2 fine = rk4Transition(m, tilde, bind, x, y, lambda, 2 * n);
    TransitionResult r;
    r.T = fine;
    r.errorEstimate = matNorm(matSub(coarse, fine)) / 15.0 / std::max(1.0, matNorm(fine));
    if (!(r.errorEstimate <= tol))
        throw StepSizeTooCoarse("estimated transition-matrix error " + formatDouble(r.errorEstimate) + " above " +
                                formatDouble(tol));
    return r;
}

std::vector<MonodromyResult> monodromyWithDefect(const Scenario& s, const std::vector<cplx>& lambdas,
                                                 const std::vector<double>& times, double dt, double h,
                                                 std::optional<std::pair<double, double>> window) {
    const ModelSpec& m = s.modelSpec();
    if (!(dt > 0)) throw InvalidParams("dt must be positive");
    int R = static_cast<int>(s.regions.size());
    double xa = window ? window->first : s.xMin, xb = window ? window->second : s.xMax;
    if (!(xa < s.defects.front().x0) || !(xb > s.defects.back().x0))
        throw InvalidParams("monodromy window must enclose every defect");
    std::vector<double> cuts{xa};
    for (auto& d : s.defects) cuts.push_back(d.x0);
    cuts.push_back(xb);

    struct Pieces {
        Mat2 right, left, middle, composite;
        double err = 0;
    };
    auto build = [&](cplx lam, double t) {
        Pieces p;
        p.middle = matIdentity();
        Mat2 acc{};
        for (int k = 0; k < R; ++k) {
            bool tilde = k == 0;
            auto bind = [&, k, tilde](double x, Bindings& b) { bindRegionValues(s, k, x, t, tilde, b); };
            TransitionResult tr = transitionMatrix(m, tilde, bind, cuts[k], cuts[k + 1], lam, h);
            p.err = std::max(p.err, tr.errorEstimate);
            if (k == 0) {
                p.left = tr.T;
                acc = tr.T;
            } else {
                Bindings b = defectBindings(s, k - 1, s.defects[k - 1].x0, t, false);
                Mat2 Li = matInverse(defectMatrixAt(s.defects[k - 1], b, lam));
                if (k < R - 1) p.middle = matMul(tr.T, matMul(Li, p.middle));
                else p.middle = matMul(Li, p.middle);
                acc = matMul(tr.T, matMul(Li, acc));
                if (k == R - 1) p.right = tr.T;
            }
        }
        p.composite = acc;
        return p;
    };

    std::vector<MonodromyResult> out;
    MatrixSeries V = laxV(m, false), Vt = laxV(m, true);
    for (cplx lam : lambdas)
        for (double t : times) {
            MonodromyResult r;
            r.lambda = lam;
            r.t = t;
            r.dt = dt;
            Pieces c = build(lam, t), plus = build(lam, t + dt), minus = build(lam, t - dt);
            r.Tright = c.right;
            r.TleftTilde = c.left;
            r.Linv = c.middle;
            r.composite = c.composite;
            r.errorEstimate = std::max({c.err, plus.err, minus.err});
            Bindings br, bl;
            bindRegion(s, R - 1, xb, t, false, br);
            bindRegion(s, 0, xa, t, true, bl);
            Mat2 Vy = laxMatrixAt(V, br, lam), Vx = laxMatrixAt(Vt, bl, lam);
            Mat2 fd = matScale(matSub(plus.composite, minus.composite), 1.0 / (2 * dt));
            Mat2 ev = matSub(matMul(Vy, c.composite), matMul(c.composite, Vx));
            r.tResidual = matNorm(matSub(fd, ev));
            r.detDefect = std::abs(matDet(c.composite) - matDet(c.right) * matDet(c.middle) * matDet(c.left));
            out.push_back(r);
        }
    return out;
}

PotentialComparison kdvPotentialComparison(const Scenario& s) {
    const ModelSpec& m = s.modelSpec();
    if (m.reductionClass != ReductionClass::III) throw WrongClass(m.id + " is not a class III model");
    if (s.defects.size() != 1) throw InvalidParams("potential comparison takes a single defect");
    const DefectSpec& d = s.defect();
    double beta = d.betaOrAlpha, alpha = -beta * beta / 4;
    Gaussian kap = displayNormalization(m.name, 3);
    P d3 = defectExpansion(m, d, 3).back();
    PotentialComparison pc;
    std::optional<cplx> prev;
    for (double t : s.times) {
        GridState g = makeGrid(s, t);
        int i0 = g.defectIndex[0];
        std::vector<cplx> f(i0 + 1);
        for (int i = 0; i <= i0; ++i) {
            Bindings bl, br;
            bindRegionValues(s, 0, g.xs[i], t, false, bl);
            bindRegionValues(s, 1, g.xs[i], t, false, br);
            f[i] = bl.get(FieldSymbol{Base::q, 0}) - br.get(FieldSymbol{Base::q, 0});
        }
        cplx pq = beta + simpson(f, 0, i0, g.h);
        Bindings b = defectBindings(s, 0, d.x0, t, false, prev);
        prev = b.omega;
        pc.t.push_back(t);
        pc.defect.push_back(kap.toComplex() * evaluate(d3, b));
        pc.potentialForm.push_back(-alpha * pq - pq * pq * pq / 12.0);
    }
    for (size_t i = 0; i < pc.t.size(); ++i)
        pc.maxDeviation = std::max(pc.maxDeviation, std::abs((pc.defect[i] - pc.defect[0]) -
                                                             (pc.potentialForm[i] - pc.potentialForm[0])));
    return pc;
}

std::string formatDouble(double v) {
    if (v == 0) v = 0;  // no negative zero
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.16e", v);
    return buf;
}

std::string chargeReportCsv(const ChargeReport& r) {
    std::ostringstream os;
    bool single = r.regions == 2;
    os << "model,scenario,order,t";
    if (single) {
        os << ",bulk_left_re,bulk_left_im,bulk_right_re,bulk_right_im,defect_re,defect_im";
    } else {
        for (int k = 0; k < r.regions; ++k) os << ",bulk_" << k << "_re,bulk_" << k << "_im";
        for (int k = 0; k + 1 < r.regions; ++k) os << ",defect_" << k << "_re,defect_" << k << "_im";
        os << ",defect_sum_re,defect_sum_im";
    }
    os << ",boundary_re,boundary_im,total_re,total_im,drift\n";
    std::map<int, cplx> first;
    for (auto& row : r.rows) {
        auto it = first.try_emplace(row.order, row.total).first;
        double drift = std::abs(row.total - it->second) / std::max(1.0, std::abs(it->second));
        auto c = [&](cplx v) { os << ',' << formatDouble(v.real()) << ',' << formatDouble(v.imag()); };
        os << r.model << ',' << r.scenario << ',' << row.order << ',' << formatDouble(row.t);
        for (auto& b : row.bulk) c(b);
        for (auto& d : row.defect) c(d);
        if (!single) c(row.defectSum());
        c(row.boundary);
        c(row.total);
        os << ',' << formatDouble(drift) << '\n';
    }
    return os.str();
}

namespace {
nlohmann::json cj(cplx v) { return nlohmann::json::array({v.real(), v.imag()}); }
nlohmann::json mj(const Mat2& m) {
    auto a = nlohmann::json::array();
    for (auto& x : m) a.push_back(cj(x));
    return a;
}
}  // namespace

nlohmann::json chargeReportJson(const ChargeReport& r) {
    nlohmann::json j;
    j["schema"] = "intdef.charges/1";
    j["model"] = r.model;
    j["scenario"] = r.scenario;
    j["regions"] = r.regions;
    for (auto& [n, k] : r.kappa) j["kappa"][std::to_string(n)] = k.str();
    for (auto& [n, d] : r.drift) j["drift"][std::to_string(n)] = d;
    j["rows"] = nlohmann::json::array();
    for (auto& row : r.rows) {
        nlohmann::json x;
        x["order"] = row.order;
        x["t"] = row.t;
        x["bulk"] = nlohmann::json::array();
        for (auto& b : row.bulk) x["bulk"].push_back(cj(b));
        x["defect"] = nlohmann::json::array();
        for (auto& d : row.defect) x["defect"].push_back(cj(d));
        x["boundary"] = cj(row.boundary);
        x["total"] = cj(row.total);
        j["rows"].push_back(x);
    }
    return j;
}

std::string monodromyCsv(const std::string& model, const std::string& scenario, const std::vector<MonodromyResult>& rs) {
    std::ostringstream os;
    os << "model,scenario,lambda_re,lambda_im,t,dt";
    for (const char* e : {"11", "12", "21", "22"}) os << ",composite_" << e << "_re,composite_" << e << "_im";
    os << ",t_residual,det_defect,error_estimate\n";
    for (auto& r : rs) {
        os << model << ',' << scenario << ',' << formatDouble(r.lambda.real()) << ',' << formatDouble(r.lambda.imag()) << ','
           << formatDouble(r.t) << ',' << formatDouble(r.dt);
        for (auto& x : r.composite) os << ',' << formatDouble(x.real()) << ',' << formatDouble(x.imag());
        os << ',' << formatDouble(r.tResidual) << ',' << formatDouble(r.detDefect) << ',' << formatDouble(r.errorEstimate)
           << '\n';
    }
    return os.str();
}

nlohmann::json monodromyJson(const std::string& model, const std::string& scenario, const std::vector<MonodromyResult>& rs) {
    nlohmann::json j;
    j["schema"] = "intdef.monodromy/1";
    j["model"] = model;
    j["scenario"] = scenario;
    j["results"] = nlohmann::json::array();
    for (auto& r : rs) {
        nlohmann::json x;
        x["lambda"] = cj(r.lambda);
        x["t"] = r.t;
        x["dt"] = r.dt;
        x["T_right"] = mj(r.Tright);
        x["T_left_tilde"] = mj(r.TleftTilde);
        x["Linv"] = mj(r.Linv);
        x["composite"] = mj(r.composite);
        x["t_residual"] = r.tResidual;
        x["det_defect"] = r.detDefect;
        x["error_estimate"] = r.errorEstimate;
        j["results"].push_back(x);
    }
    return j;
}

}  // namespace intdef
