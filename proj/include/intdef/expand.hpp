#pragma once
// Canonical text and JSON dumps of the symbolic hierarchy of one model.

#include <string>

#include "intdef/displays.hpp"

namespace intdef {

// AKNS: Gamma_n, density_n, flux_n, defect_n (generic, sheet `signBranch`) for
// n = 1..N, plus kappa_n, display_n and the on-shell defect group when a
// reference display exists.  KN: Gamma_n, density_n, flux_n for n = 0..N.
// N = 0 gives an empty dump.
std::string expandText(const ModelSpec& m, int N, int signBranch = 1);
nlohmann::json expandJson(const ModelSpec& m, int N, int signBranch = 1);

}  // namespace intdef
