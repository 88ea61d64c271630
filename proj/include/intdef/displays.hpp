#pragma once
// Reference charge displays in reduced variables and the pipeline that
// matches the computed hierarchy against them.
//
// Reduced symbols: q = u, r = u* (class I), qt = u~, rt = u~*.  The
// displays use Omega_eps = -i Omega.  The upper sign of each display pairs
// with signBranch = +1; the lower one follows from Omega -> -Omega.

#include <optional>
#include <string>
#include <vector>

#include "intdef/charges.hpp"

namespace intdef {

struct DisplayCharge {
    ModelName model = ModelName::NLSfocusing;
    int order = 1;
    std::string label;
    DiffPolynomial bulk;                        // right-side integrand; left side is its tilde image
    DiffPolynomial defect;                      // x0 group, signBranch = +1
    std::optional<DiffPolynomial> edgeRight;    // Liouville: group evaluated at +infinity
    std::optional<DiffPolynomial> edgeLeft;     // and at -infinity
    std::optional<Gaussian> kappa;              // fixed normalization when the bulk carries none
    bool constantAllowed = false;               // match up to a field-independent constant
};

const std::vector<DisplayCharge>& referenceDisplays();
const DisplayCharge& referenceDisplay(ModelName m, int order);  // throws OrderUnavailable

struct MatchResult {
    bool ok = false;
    Gaussian kappa{1};
    DiffPolynomial F;            // bulk display = kappa*density + D_x F, reduced
    DiffPolynomial defectOnShell;
    DiffPolynomial difference;   // ours - display (constant when constantAllowed)
    std::optional<DiffPolynomial> edgeRight, edgeLeft;
    std::string detail;
};

// signBranch selects the sheet; the display is flipped with Omega -> -Omega.
MatchResult matchDisplay(const DisplayCharge& d, int signBranch = 1);

// kappa_n for the harness: the matched display value, 1 when no display exists.
Gaussian displayNormalization(ModelName m, int order);

// Reduced radicand Omega^2 of a model.
DiffPolynomial reducedRadicand(const ModelSpec& m);

// Replace tilde first derivatives by the x-part of the Backlund transformation
// (reduced space).  Higher tilde derivatives throw OrderUnavailable.
DiffPolynomial onShellBacklund(const ModelSpec& m, int signBranch, const DiffPolynomial& reduced);

// Liouville: Omega -> i (q~ - q), alpha -> 0.
DiffPolynomial liouvilleCollapse(const DiffPolynomial& reduced);

}  // namespace intdef
