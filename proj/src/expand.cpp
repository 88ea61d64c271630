#include "intdef/expand.hpp"

#include <sstream>

namespace intdef {

namespace {

struct Entry {
    std::string key, value;
};

std::vector<Entry> entries(const ModelSpec& m, int N, int sgn) {
    std::vector<Entry> out;
    if (N <= 0) return out;
    out.push_back({"model", m.id});
    out.push_back({"scheme", schemeName(m.scheme)});
    out.push_back({"class", className(m.reductionClass)});
    out.push_back({"epsilon", std::to_string(m.epsilon)});
    auto idx = [](const std::string& k, int n) { return k + "_" + std::to_string(n); };
    if (m.scheme == Scheme::KN) {
        auto g = gammaExpandKN(m, N);
        for (int n = 0; n <= N; ++n) out.push_back({idx("Gamma", n), g[n].str()});
        for (int n = 0; n <= N; ++n) out.push_back({idx("density", n), bulkDensity(m, n).str()});
        for (int n = 0; n <= N; ++n) out.push_back({idx("flux", n), bulkFlux(m, n).str()});
        return out;
    }
    auto g = gammaExpandAKNS(m, N);
    for (int n = 1; n <= N; ++n) out.push_back({idx("Gamma", n), g[n - 1].str()});
    for (int n = 1; n <= N; ++n) out.push_back({idx("density", n), bulkDensity(m, n).str()});
    for (int n = 1; n <= N; ++n) out.push_back({idx("flux", n), bulkFlux(m, n).str()});
    DefectSpec d;
    d.signBranch = sgn;
    auto dn = defectExpansion(m, d, N);
    out.push_back({"sign", std::to_string(sgn)});
    for (int n = 1; n <= N; ++n) out.push_back({idx("defect", n), dn[n - 1].str()});
    bool liouville = m.name == ModelName::LiouvilleLC;
    for (int n = 1; n <= N; ++n) {
        for (auto& disp : referenceDisplays()) {
            if (disp.model != m.name || disp.order != n) continue;
            if (liouville && sgn != 1) continue;
            MatchResult r = matchDisplay(disp, sgn);
            out.push_back({idx("kappa", n), r.kappa.str()});
            out.push_back({idx("display_bulk", n), disp.bulk.str()});
            out.push_back({idx("display_defect", n), (sgn == 1 ? disp.defect : r.defectOnShell - r.difference).str()});
            out.push_back({idx("defect_onshell", n), r.defectOnShell.str()});
            out.push_back({idx("display_match", n), r.ok ? "exact" : "differs"});
            if (r.edgeRight) out.push_back({idx("edge_right", n), r.edgeRight->str()});
            if (r.edgeLeft) out.push_back({idx("edge_left", n), r.edgeLeft->str()});
        }
    }
    return out;
}

}  // namespace

std::string expandText(const ModelSpec& m, int N, int sgn) {
    std::ostringstream os;
    for (auto& e : entries(m, N, sgn)) os << e.key << " = " << e.value << '\n';
    return os.str();
}

nlohmann::json expandJson(const ModelSpec& m, int N, int sgn) {
    nlohmann::json j;
    j["schema"] = "intdef.expand/1";
    j["entries"] = nlohmann::json::array();
    for (auto& e : entries(m, N, sgn)) j["entries"].push_back({{"key", e.key}, {"value", e.value}});
    return j;
}

}  // namespace intdef
