#pragma once

#include <stdexcept>
#include <string>

namespace gkzcy {

// Base for all pipeline errors; `code` is the stable machine-readable name.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& msg)
        : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

#define GKZCY_ERROR(NAME)                                            \
    class NAME : public Error {                                      \
    public:                                                          \
        explicit NAME(const std::string& msg) : Error(#NAME, msg) {} \
    }

GKZCY_ERROR(OriginNotInterior);
GKZCY_ERROR(NonIntegralDual);
GKZCY_ERROR(NonExtremalVertex);
GKZCY_ERROR(DegenerateWeight);
GKZCY_ERROR(NonUnimodularCone);
GKZCY_ERROR(EmptyInterior);
GKZCY_ERROR(NotSimplicial);
GKZCY_ERROR(NotRegular);
GKZCY_ERROR(NotMaximal);
GKZCY_ERROR(NonGenericWeight);
GKZCY_ERROR(BudgetExceeded);
GKZCY_ERROR(ChiZero);
GKZCY_ERROR(DomainShift);
GKZCY_ERROR(NilpotentDivision);
GKZCY_ERROR(InconsistentExtraction);
GKZCY_ERROR(ParseError);

#undef GKZCY_ERROR

}  // namespace gkzcy
