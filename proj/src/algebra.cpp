#include "intdef/algebra.hpp"

#include <algorithm>
#include <map>
#include <sstream>



namespace intdef {

namespace {

const char* kBaseNames[kBaseCount] = {"q", "r", "qt", "rt", "cosv", "sinv", "cosvt", "sinvt", "expv", "expvt"};
const char* kParamNames[kParamCount] = {"alpha_plus", "alpha_minus", "beta", "alpha", "gamma"};

std::string derivSuffix(int k) {
    if (k == 0) return "";
    if (k <= 3) return "_" + std::string(k, 'x');
    return "_x" + std::to_string(k);
}

Monomial product(const Monomial& a, const Monomial& b) {
    Monomial m;
    m.fields.reserve(a.fields.size() + b.fields.size());
    auto i = a.fields.begin(), j = b.fields.begin();
    while (i != a.fields.end() || j != b.fields.end()) {
        if (j == b.fields.end() || (i != a.fields.end() && i->first < j->first)) {
            m.fields.push_back(*i++);
        } else if (i == a.fields.end() || j->first < i->first) {
            m.fields.push_back(*j++);
        } else {
            m.fields.emplace_back(i->first, i->second + j->second);
            ++i;
            ++j;
        }
    }
    for (int k = 0; k < kParamCount; ++k) {
        int e = a.params[k] + b.params[k];
        if (e > 255) throw std::overflow_error("parameter exponent overflow");
        m.params[k] = static_cast<std::uint8_t>(e);
    }
    m.omega = static_cast<std::uint8_t>(a.omega + b.omega);
    return m;
}

void accumulate(std::map<Monomial, Gaussian>& acc, const Monomial& m, const Gaussian& c) {
    auto [it, fresh] = acc.try_emplace(m, c);
    if (!fresh) it->second += c;
}

std::vector<Term> drain(std::map<Monomial, Gaussian>& acc) {
    std::vector<Term> out;
    out.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (!c.isZero()) out.push_back(Term{m, c});
    return out;
}

}  // namespace

bool isAux(Base b) { return static_cast<int>(b) >= static_cast<int>(Base::cosv); }

bool isTilde(Base b) {
    switch (b) {
        case Base::qt: case Base::rt: case Base::cosvt: case Base::sinvt: case Base::expvt: return true;
        default: return false;
    }
}

Base tildeOf(Base b) {
    switch (b) {
        case Base::q: return Base::qt;
        case Base::r: return Base::rt;
        case Base::cosv: return Base::cosvt;
        case Base::sinv: return Base::sinvt;
        case Base::expv: return Base::expvt;
        default: return b;
    }
}

Base untildeOf(Base b) {
    switch (b) {
        case Base::qt: return Base::q;
        case Base::rt: return Base::r;
        case Base::cosvt: return Base::cosv;
        case Base::sinvt: return Base::sinv;
        case Base::expvt: return Base::expv;
        default: return b;
    }
}

std::string FieldSymbol::name() const { return kBaseNames[static_cast<int>(base)] + derivSuffix(order); }

std::string paramName(Param p) { return kParamNames[static_cast<int>(p)]; }

bool Monomial::isConstant() const {
    if (!fields.empty() || omega) return false;
    return true;
}

int Monomial::fieldDegree() const {
    int d = 0;
    for (auto& f : fields) d += f.second;
    return d;
}

std::string Monomial::str() const {
    std::string s;
    auto put = [&](const std::string& name, int e) {
        if (!s.empty()) s += "*";
        s += name;
        if (e != 1) s += "^" + std::to_string(e);
    };
    for (auto& [f, e] : fields) put(f.name(), e);
    for (int k = 0; k < kParamCount; ++k)
        if (params[k]) put(kParamNames[k], params[k]);
    if (omega) put("Omega", 1);
    return s;
}

// --- DiffPolynomial --------------------------------------------------------

DiffPolynomial::DiffPolynomial(long long c) : DiffPolynomial(Gaussian(c)) {}

DiffPolynomial::DiffPolynomial(const Gaussian& c) {
    if (!c.isZero()) terms_.push_back(Term{Monomial{}, c});
}

DiffPolynomial DiffPolynomial::field(FieldSymbol s) {
    if (s.order < 0 || s.order > kMaxDeriv) throw std::out_of_range("derivative order out of range: " + s.name());
    if (isAux(s.base) && s.order != 0) throw std::invalid_argument("auxiliary generators carry no derivative index");
    DiffPolynomial p;
    Monomial m;
    m.fields.emplace_back(s, 1);
    p.terms_.push_back(Term{m, Gaussian(1)});
    return p;
}

DiffPolynomial DiffPolynomial::param(Param pr, int power) {
    DiffPolynomial p;
    Monomial m;
    m.params[static_cast<int>(pr)] = static_cast<std::uint8_t>(power);
    p.terms_.push_back(Term{m, Gaussian(1)});
    return p;
}

DiffPolynomial DiffPolynomial::omega() {
    DiffPolynomial p;
    Monomial m;
    m.omega = 1;
    p.terms_.push_back(Term{m, Gaussian(1)});
    return p;
}

DiffPolynomial DiffPolynomial::fromTerms(std::vector<Term> terms) {
    std::map<Monomial, Gaussian> acc;
    DiffPolynomial sq;
    for (auto& t : terms) {
        if (t.mono.omega > 1) {
            Monomial m = t.mono;
            int e = m.omega;
            m.omega = static_cast<std::uint8_t>(e % 2);
            DiffPolynomial part = DiffPolynomial::fromTerms({Term{m, t.coeff}});
            sq += part * defaultRadicand().pow(e / 2);
            continue;
        }
        accumulate(acc, t.mono, t.coeff);
    }
    DiffPolynomial p;
    p.terms_ = drain(acc);
    return p + sq;
}

bool DiffPolynomial::hasOmega() const {
    return std::any_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.mono.omega != 0; });
}

bool DiffPolynomial::hasAux() const {
    for (auto& t : terms_)
        for (auto& f : t.mono.fields)
            if (isAux(f.first.base)) return true;
    return false;
}

bool DiffPolynomial::isConstant() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.mono.isConstant(); });
}

std::optional<Gaussian> DiffPolynomial::numericConstant() const {
    if (terms_.empty()) return Gaussian(0);
    if (terms_.size() == 1 && terms_[0].mono == Monomial{}) return terms_[0].coeff;
    return std::nullopt;
}

int DiffPolynomial::maxOrder(Base b) const {
    int m = -1;
    for (auto& t : terms_)
        for (auto& f : t.mono.fields)
            if (f.first.base == b) m = std::max(m, f.first.order);
    return m;
}

DiffPolynomial DiffPolynomial::operator-() const { return scaled(Gaussian(-1)); }

DiffPolynomial& DiffPolynomial::operator+=(const DiffPolynomial& o) {
    if (o.terms_.empty()) return *this;
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto i = terms_.cbegin();
    auto j = o.terms_.cbegin();
    while (i != terms_.end() || j != o.terms_.end()) {
        if (j == o.terms_.end() || (i != terms_.end() && i->mono < j->mono)) {
            out.push_back(*i++);
        } else if (i == terms_.end() || j->mono < i->mono) {
            out.push_back(*j++);
        } else {
            Gaussian c = i->coeff + j->coeff;
            if (!c.isZero()) out.push_back(Term{i->mono, c});
            ++i;
            ++j;
        }
    }
    terms_ = std::move(out);
    return *this;
}

DiffPolynomial& DiffPolynomial::operator-=(const DiffPolynomial& o) { return *this += -o; }

DiffPolynomial DiffPolynomial::mul(const DiffPolynomial& a, const DiffPolynomial& b, const DiffPolynomial& radicand) {
    if (a.isZero() || b.isZero()) return {};
    std::map<Monomial, Gaussian> acc, squares;
    for (auto& x : a.terms_)
        for (auto& y : b.terms_) {
            Monomial m = product(x.mono, y.mono);
            Gaussian c = x.coeff * y.coeff;
            if (m.omega == 2) {
                m.omega = 0;
                accumulate(squares, m, c);
            } else {
                accumulate(acc, m, c);
            }
        }
    DiffPolynomial p;
    p.terms_ = drain(acc);
    if (!squares.empty()) {
        DiffPolynomial s;
        s.terms_ = drain(squares);
        if (radicand.hasOmega()) throw std::invalid_argument("radicand must be Omega-free");
        p += mul(s, radicand, radicand);
    }
    return p;
}

DiffPolynomial DiffPolynomial::scaled(const Gaussian& c) const {
    if (c.isZero()) return {};
    DiffPolynomial p = *this;
    for (auto& t : p.terms_) t.coeff *= c;
    return p;
}

DiffPolynomial DiffPolynomial::pow(int n) const {
    if (n < 0) throw std::invalid_argument("negative power of a polynomial");
    DiffPolynomial r(1), b = *this;
    while (n > 0) {
        if (n & 1) r *= b;
        n >>= 1;
        if (n) b *= b;
    }
    return r;
}

DiffPolynomial DiffPolynomial::omegaFree() const {
    DiffPolynomial p;
    for (auto& t : terms_)
        if (!t.mono.omega) p.terms_.push_back(t);
    return p;
}

DiffPolynomial DiffPolynomial::omegaCoefficient() const {
    std::vector<Term> out;
    for (auto& t : terms_)
        if (t.mono.omega) {
            Term u = t;
            u.mono.omega = 0;
            out.push_back(u);
        }
    return fromTerms(std::move(out));
}

std::string DiffPolynomial::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto& t : terms_) {
        if (!s.empty()) s += " + ";
        std::string m = t.mono.str();
        if (m.empty()) {
            s += "(" + t.coeff.str() + ")";
        } else if (t.coeff.isOne()) {
            s += m;
        } else {
            s += "(" + t.coeff.str() + ")*" + m;
        }
    }
    return s;
}

namespace {

std::pair<std::string, int> splitPower(const std::string& f) {
    auto c = f.find('^');
    if (c == std::string::npos) return {f, 1};
    return {f.substr(0, c), std::stoi(f.substr(c + 1))};
}

// Parses one generator name into the monomial.
void parseFactor(const std::string& tok, Monomial& m) {
    auto [name, e] = splitPower(tok);
    if (e <= 0) throw ParseError("bad exponent in '" + tok + "'");
    if (name == "Omega") {
        if (e != 1 || m.omega) throw ParseError("Omega must appear at most once");
        m.omega = 1;
        return;
    }
    for (int k = 0; k < kParamCount; ++k)
        if (name == kParamNames[k]) {
            m.params[k] = static_cast<std::uint8_t>(m.params[k] + e);
            return;
        }
    auto us = name.find('_');
    std::string base = name.substr(0, us);
    int order = 0;
    if (us != std::string::npos) {
        std::string suf = name.substr(us + 1);
        if (suf.empty() || suf[0] != 'x') throw ParseError("bad derivative suffix in '" + tok + "'");
        if (suf.find_first_not_of('x') == std::string::npos)
            order = static_cast<int>(suf.size());
        else
            order = std::stoi(suf.substr(1));
    }
    for (int k = 0; k < kBaseCount; ++k)
        if (base == kBaseNames[k]) {
            FieldSymbol s{static_cast<Base>(k), order};
            auto it = std::find_if(m.fields.begin(), m.fields.end(), [&](auto& f) { return f.first == s; });
            if (it != m.fields.end())
                it->second += e;
            else
                m.fields.emplace_back(s, e);
            return;
        }
    throw ParseError("unknown generator '" + name + "'");
}

}  // namespace

DiffPolynomial DiffPolynomial::parse(const std::string& text) {
    std::string s = text;
    auto trim = [](std::string v) {
        auto a = v.find_first_not_of(" \t\n");
        auto b = v.find_last_not_of(" \t\n");
        return a == std::string::npos ? std::string() : v.substr(a, b - a + 1);
    };
    s = trim(s);
    if (s.empty()) throw ParseError("empty polynomial text");
    if (s == "0") return {};
    std::vector<Term> terms;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t next = s.find(" + ", pos);
        std::string t = trim(s.substr(pos, next == std::string::npos ? std::string::npos : next - pos));
        pos = next == std::string::npos ? s.size() + 1 : next + 3;
        Term term{Monomial{}, Gaussian(1)};
        std::string rest = t;
        if (!t.empty() && t[0] == '(') {
            auto close = t.find(')');
            if (close == std::string::npos) throw ParseError("unbalanced coefficient in '" + t + "'");
            try {
                term.coeff = Gaussian::parse(t.substr(1, close - 1));
            } catch (const std::exception& e) {
                throw ParseError("bad coefficient in '" + t + "'");
            }
            rest = t.substr(close + 1);
            if (!rest.empty()) {
                if (rest[0] != '*') throw ParseError("expected '*' after coefficient in '" + t + "'");
                rest.erase(0, 1);
            }
        }
        std::stringstream ss(rest);
        std::string f;
        while (std::getline(ss, f, '*')) {
            if (f.empty()) throw ParseError("empty factor in '" + t + "'");
            parseFactor(f, term.mono);
        }
        std::sort(term.mono.fields.begin(), term.mono.fields.end());
        terms.push_back(term);
    }
    return fromTerms(std::move(terms));
}

nlohmann::json DiffPolynomial::toJson() const {
    nlohmann::json arr = nlohmann::json::array();
    for (auto& t : terms_) {
        nlohmann::json fields = nlohmann::json::array();
        for (auto& [f, e] : t.mono.fields) fields.push_back({kBaseNames[static_cast<int>(f.base)], f.order, e});
        nlohmann::json params = nlohmann::json::array();
        for (int k = 0; k < kParamCount; ++k)
            if (t.mono.params[k]) params.push_back({kParamNames[k], t.mono.params[k]});
        arr.push_back({{"re", t.coeff.re().str()},
                       {"im", t.coeff.im().str()},
                       {"fields", fields},
                       {"params", params},
                       {"omega", t.mono.omega}});
    }
    return {{"terms", arr}};
}

DiffPolynomial DiffPolynomial::fromJson(const nlohmann::json& j) {
    std::vector<Term> terms;
    for (auto& t : j.at("terms")) {
        Term term;
        term.coeff = Gaussian(Rational::parse(t.at("re").get<std::string>()), Rational::parse(t.at("im").get<std::string>()));
        for (auto& f : t.at("fields")) {
            std::string b = f.at(0).get<std::string>();
            auto it = std::find(std::begin(kBaseNames), std::end(kBaseNames), b);
            if (it == std::end(kBaseNames)) throw ParseError("unknown base '" + b + "'");
            term.mono.fields.emplace_back(FieldSymbol{static_cast<Base>(it - std::begin(kBaseNames)), f.at(1).get<int>()},
                                          f.at(2).get<int>());
        }
        for (auto& p : t.at("params")) {
            std::string n = p.at(0).get<std::string>();
            auto it = std::find(std::begin(kParamNames), std::end(kParamNames), n);
            if (it == std::end(kParamNames)) throw ParseError("unknown parameter '" + n + "'");
            term.mono.params[it - std::begin(kParamNames)] = p.at(1).get<std::uint8_t>();
        }
        term.mono.omega = t.at("omega").get<std::uint8_t>();
        std::sort(term.mono.fields.begin(), term.mono.fields.end());
        terms.push_back(term);
    }
    return fromTerms(std::move(terms));
}

const DiffPolynomial& defaultRadicand() {
    static const DiffPolynomial rad = [] {
        DiffPolynomial dq = DiffPolynomial::field(Base::qt) - DiffPolynomial::field(Base::q);
        DiffPolynomial dr = DiffPolynomial::field(Base::rt) - DiffPolynomial::field(Base::r);
        DiffPolynomial am = DiffPolynomial::param(Param::alphaMinus, 2);
        return am - DiffPolynomial::mul(dq, dr, DiffPolynomial());
    }();
    return rad;
}

// --- homomorphisms and derivations ----------------------------------------

DiffPolynomial substitute(const DiffPolynomial& p, const Substitution& s) {
    std::map<FieldSymbol, std::vector<DiffPolynomial>> fieldPow;
    std::map<int, std::vector<DiffPolynomial>> paramPow;
    auto powerOf = [&](auto& cache, auto key, int e, auto image) -> const DiffPolynomial& {
        auto& v = cache[key];
        if (v.empty()) {
            v.push_back(DiffPolynomial(1));
            v.push_back(image());
        }
        while (static_cast<int>(v.size()) <= e) v.push_back(DiffPolynomial::mul(v.back(), v[1], s.radicand));
        return v[e];
    };
    DiffPolynomial omegaImage = s.omega ? *s.omega : DiffPolynomial::omega();
    DiffPolynomial out;
    for (auto& t : p.terms()) {
        DiffPolynomial acc(t.coeff);
        for (auto& [f, e] : t.mono.fields) {
            const DiffPolynomial& img = powerOf(fieldPow, f, e, [&] {
                if (s.field)
                    if (auto r = s.field(f)) return *r;
                return DiffPolynomial::field(f);
            });
            acc = DiffPolynomial::mul(acc, img, s.radicand);
        }
        for (int k = 0; k < kParamCount; ++k) {
            if (!t.mono.params[k]) continue;
            const DiffPolynomial& img = powerOf(paramPow, k, t.mono.params[k], [&] {
                if (s.param)
                    if (auto r = s.param(static_cast<Param>(k))) return *r;
                return DiffPolynomial::param(static_cast<Param>(k));
            });
            acc = DiffPolynomial::mul(acc, img, s.radicand);
        }
        if (t.mono.omega) acc = DiffPolynomial::mul(acc, omegaImage, s.radicand);
        out += acc;
    }
    return out;
}

DiffPolynomial conjugateCoefficients(const DiffPolynomial& p) {
    std::vector<Term> t = p.terms();
    for (auto& x : t) x.coeff = x.coeff.conj();
    return DiffPolynomial::fromTerms(std::move(t));
}

DiffPolynomial derivation(const DiffPolynomial& p, const std::function<DiffPolynomial(FieldSymbol)>& onField) {
    std::map<FieldSymbol, DiffPolynomial> image;
    DiffPolynomial out;
    for (auto& t : p.terms()) {
        if (t.mono.omega) throw OmegaNotDifferentiable("term " + t.mono.str());
        for (std::size_t k = 0; k < t.mono.fields.size(); ++k) {
            auto [f, e] = t.mono.fields[k];
            auto it = image.find(f);
            if (it == image.end()) it = image.emplace(f, onField(f)).first;
            if (it->second.isZero()) continue;
            Monomial rest = t.mono;
            if (e == 1)
                rest.fields.erase(rest.fields.begin() + k);
            else
                rest.fields[k].second = e - 1;
            DiffPolynomial r = DiffPolynomial::fromTerms({Term{rest, t.coeff * Gaussian(e)}});
            out += r * it->second;
        }
    }
    return out;
}

DiffPolynomial fieldXDerivative(FieldSymbol s) {
    using P = DiffPolynomial;
    switch (s.base) {
        case Base::cosv: return P(2) * P::field(Base::q) * P::field(Base::sinv);
        case Base::sinv: return P(-2) * P::field(Base::q) * P::field(Base::cosv);
        case Base::cosvt: return P(2) * P::field(Base::qt) * P::field(Base::sinvt);
        case Base::sinvt: return P(-2) * P::field(Base::qt) * P::field(Base::cosvt);
        case Base::expv: return P(2) * P::field(Base::q) * P::field(Base::expv);
        case Base::expvt: return P(2) * P::field(Base::qt) * P::field(Base::expvt);
        default: return P::field(FieldSymbol{s.base, s.order + 1});
    }
}

DiffPolynomial totalXDerivative(const DiffPolynomial& p) { return derivation(p, fieldXDerivative); }

DiffPolynomial totalXDerivative(const DiffPolynomial& p, int times) {
    DiffPolynomial r = p;
    for (int k = 0; k < times; ++k) r = totalXDerivative(r);
    return r;
}

DiffPolynomial partialDerivative(const DiffPolynomial& p, FieldSymbol s) {
    std::vector<Term> out;
    for (auto& t : p.terms())
        for (std::size_t k = 0; k < t.mono.fields.size(); ++k) {
            if (t.mono.fields[k].first != s) continue;
            int e = t.mono.fields[k].second;
            Term u = t;
            u.coeff *= Gaussian(e);
            if (e == 1)
                u.mono.fields.erase(u.mono.fields.begin() + k);
            else
                u.mono.fields[k].second = e - 1;
            out.push_back(u);
        }
    return DiffPolynomial::fromTerms(std::move(out));
}

DiffPolynomial partialDerivative(const DiffPolynomial& p, Param s) {
    std::vector<Term> out;
    int k = static_cast<int>(s);
    for (auto& t : p.terms()) {
        if (!t.mono.params[k]) continue;
        Term u = t;
        u.coeff *= Gaussian(t.mono.params[k]);
        u.mono.params[k]--;
        out.push_back(u);
    }
    return DiffPolynomial::fromTerms(std::move(out));
}

DiffPolynomial eulerOperator(const DiffPolynomial& p, Base b) {
    if (p.hasAux()) throw std::invalid_argument("Euler operator needs independent jet coordinates (no auxiliary generators)");
    if (p.hasOmega()) throw OmegaNotDifferentiable("Euler operator on Omega-bearing input");
    DiffPolynomial out;
    int top = p.maxOrder(b);
    for (int k = 0; k <= top; ++k) {
        DiffPolynomial d = totalXDerivative(partialDerivative(p, FieldSymbol{b, k}), k);
        out += (k % 2 == 0) ? d : -d;
    }
    return out;
}

bool isTotalXDerivative(const DiffPolynomial& p) {
    for (int k = 0; k < kBaseCount; ++k) {
        Base b = static_cast<Base>(k);
        if (p.maxOrder(b) >= 0 && !eulerOperator(p, b).isZero()) return false;
    }
    return true;
}

DiffPolynomial integrateX(const DiffPolynomial& p) {
    if (p.hasAux()) throw std::invalid_argument("integrateX needs independent jet coordinates");
    // split by total field degree
    std::map<int, std::vector<Term>> byDegree;
    for (auto& t : p.terms()) {
        int d = t.mono.fieldDegree();
        if (d == 0) throw std::invalid_argument("integrateX: field-free term is not D_x-exact");
        byDegree[d].push_back(t);
    }
    DiffPolynomial out;
    for (auto& [d, terms] : byDegree) {
        DiffPolynomial pd = DiffPolynomial::fromTerms(terms);
        DiffPolynomial h;
        for (int bi = 0; bi < kBaseCount; ++bi) {
            Base b = static_cast<Base>(bi);
            int top = pd.maxOrder(b);
            for (int k = 1; k <= top; ++k) {
                DiffPolynomial dp = partialDerivative(pd, FieldSymbol{b, k});
                if (dp.isZero()) continue;
                for (int i = 0; i < k; ++i) {
                    int m = k - 1 - i;
                    DiffPolynomial w = totalXDerivative(dp, m);
                    if (m % 2) w = -w;
                    h += DiffPolynomial::field(FieldSymbol{b, i}) * w;
                }
            }
        }
        out += h.scaled(Gaussian(Rational(1, d)));
    }
    return out;
}

// --- numeric evaluation ---------------------------------------------------

void Bindings::set(FieldSymbol s, std::complex<double> v) {
    field[static_cast<int>(s.base)][s.order] = v;
    bound[static_cast<int>(s.base)][s.order] = true;
}

void Bindings::set(Param p, std::complex<double> v) {
    param[static_cast<int>(p)] = v;
    paramBound[static_cast<int>(p)] = true;
}

std::complex<double> Bindings::get(FieldSymbol s) const {
    if (s.order > kMaxDeriv || !bound[static_cast<int>(s.base)][s.order]) throw UnboundSymbol(s.name());
    return field[static_cast<int>(s.base)][s.order];
}

std::complex<double> Bindings::get(Param p) const {
    if (!paramBound[static_cast<int>(p)]) throw UnboundSymbol(paramName(p));
    return param[static_cast<int>(p)];
}

void Bindings::setT(Base b, std::complex<double> v) {
    int k = static_cast<int>(b);
    if (k > 3) throw std::invalid_argument("time derivatives are stored for q, r, q~, r~ only");
    fieldT[k] = v;
    fieldTBound[k] = true;
}

std::complex<double> Bindings::getT(Base b) const {
    int k = static_cast<int>(b);
    if (k > 3 || !fieldTBound[k]) throw UnboundSymbol(FieldSymbol{b, 0}.name() + " time derivative");
    return fieldT[k];
}

std::complex<double> omegaValue(const Bindings& b) {
    if (b.omega) return *b.omega;
    auto am = b.get(Param::alphaMinus);
    auto rad = am * am - (b.get(FieldSymbol{Base::qt, 0}) - b.get(FieldSymbol{Base::q, 0})) *
                             (b.get(FieldSymbol{Base::rt, 0}) - b.get(FieldSymbol{Base::r, 0}));
    return static_cast<double>(b.omegaBranch) * std::sqrt(rad);
}

std::complex<double> evaluate(const DiffPolynomial& p, const Bindings& b) {
    std::complex<double> sum = 0, om = 0;
    bool haveOmega = false;
    for (auto& t : p.terms()) {
        std::complex<double> v = t.coeff.toComplex();
        for (auto& [f, e] : t.mono.fields) {
            auto x = b.get(f);
            for (int k = 0; k < e; ++k) v *= x;
        }
        for (int k = 0; k < kParamCount; ++k)
            if (t.mono.params[k]) {
                auto x = b.get(static_cast<Param>(k));
                for (int j = 0; j < t.mono.params[k]; ++j) v *= x;
            }
        if (t.mono.omega) {
            if (!haveOmega) {
                om = omegaValue(b);
                haveOmega = true;
            }
            v *= om;
        }
        sum += v;
    }
    return sum;
}

}  // namespace intdef
