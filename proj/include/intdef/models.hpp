#pragma once
// Registered integrable models: Lax pair data in generic (q, r) form plus the
// equation-of-motion substitution rules and the reduction class.

#include <string>
#include <vector>

#include "intdef/series.hpp"

namespace intdef {

enum class ModelName { NLSfocusing, NLSdefocusing, mKdVplus, mKdVminus, sineGordonLC, LiouvilleLC, KdVplus, KdVminus, DNLS };
enum class Scheme { AKNS, KN };
enum class ReductionClass { I, II, III, none };
// How the physical field relates to u = q.
enum class Potential { none, sineGordon, liouville, kdv };

struct ModelSpec {
    ModelName name = ModelName::NLSfocusing;
    std::string id;
    Scheme scheme = Scheme::AKNS;
    ReductionClass reductionClass = ReductionClass::I;
    int epsilon = 1;
    MatrixSeries V;  // generic, untilded
    DiffPolynomial eomQ, eomR;
    bool lightCone = false;
    Potential potential = Potential::none;
    LaurentSeries dispersion;
};

std::vector<ModelSpec> registerBuiltinModels();
const std::vector<ModelSpec>& builtinModels();
const ModelSpec& modelByName(ModelName n);
const ModelSpec& modelById(const std::string& id);  // throws std::out_of_range
std::string className(ReductionClass c);
std::string schemeName(Scheme s);

// q -> q~, r -> r~ and auxiliary generators likewise.
DiffPolynomial tildeMap(const DiffPolynomial& p);
LaurentSeries tildeMap(const LaurentSeries& s);
MatrixSeries tildeMap(const MatrixSeries& m);

MatrixSeries laxU(const ModelSpec& m, bool tilde = false);
MatrixSeries laxV(const ModelSpec& m, bool tilde = false);

// D_t through the equations of motion, on both sides of the defect.
DiffPolynomial timeDerivative(const ModelSpec& m, const DiffPolynomial& p);
LaurentSeries timeDerivative(const ModelSpec& m, const LaurentSeries& s);

// U_t - V_x + [U, V].  Light-cone models close only after reduction, so their
// residual is returned reduced; the others are returned in generic form.
MatrixSeries zeroCurvatureResidual(const ModelSpec& m);

// Class reduction.  Class I keeps r as the symbol for eps*u*, i.e. r -> eps r.
// Class III applies the sigma_3 twist to the tilde side when `twist` is set.
DiffPolynomial applyReduction(const ModelSpec& m, const DiffPolynomial& p, bool twist = true);
DiffPolynomial applyReduction(ReductionClass c, int epsilon, const DiffPolynomial& p, bool twist = true);

// Complex conjugation compatible with r = eps u* (and real fields):
// q_k <-> eps r_k on both sides, coefficients conjugated, alpha_- -> -alpha_-,
// Omega -> -Omega, other parameters and auxiliary generators real.
DiffPolynomial reductionConjugate(const DiffPolynomial& p, int epsilon);

// B = eps C*(lambda*) coefficientwise.
bool checkVSymmetry(const ModelSpec& m);
// V at vanishing fields equals omega(lambda) sigma_3.
bool checkBoundaryBehaviour(const ModelSpec& m);

nlohmann::json modelToJson(const ModelSpec& m);
ModelSpec modelFromJson(const nlohmann::json& j);

}  // namespace intdef
