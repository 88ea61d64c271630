#pragma once
#include <stdexcept>
#include <string>

namespace intdef {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define INTDEF_ERROR(Name)                                          \
    struct Name : Error {                                           \
        explicit Name(const std::string& m) : Error(#Name ": " + m) {} \
    }

INTDEF_ERROR(OmegaNotDifferentiable);
INTDEF_ERROR(UnboundSymbol);
INTDEF_ERROR(ParseError);
INTDEF_ERROR(NotUnitSeries);
INTDEF_ERROR(SingularLeadingTerm);
INTDEF_ERROR(ParityMismatch);
INTDEF_ERROR(UnknownClass);
INTDEF_ERROR(InvalidParams);
INTDEF_ERROR(WrongPolarity);
INTDEF_ERROR(DegenerateEigenvalues);
INTDEF_ERROR(OverlappingDefects);
INTDEF_ERROR(OrderUnavailable);
INTDEF_ERROR(WrongClass);
INTDEF_ERROR(WrongModel);
INTDEF_ERROR(BlowUp);
INTDEF_ERROR(StepSizeTooCoarse);
INTDEF_ERROR(QuadratureUnderflow);
INTDEF_ERROR(ConfigError);

#undef INTDEF_ERROR

}  // namespace intdef
