#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace hilbgen {

// Base class for all domain errors. `kind()` is stable and machine-readable;
// the CLI maps it into its error envelope.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& msg)
        : std::runtime_error(msg), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

#define HILBGEN_DEFINE_ERROR(Name)                                  \
    class Name : public Error {                                     \
    public:                                                         \
        explicit Name(const std::string& msg) : Error(#Name, msg) {} \
    }

HILBGEN_DEFINE_ERROR(NonUnitLeadingCoefficient);
HILBGEN_DEFINE_ERROR(InexactRoot);
HILBGEN_DEFINE_ERROR(OffsetMismatch);
HILBGEN_DEFINE_ERROR(NotPalindromic);
HILBGEN_DEFINE_ERROR(NonIntegralExpansion);
HILBGEN_DEFINE_ERROR(BasisOffsetViolation);
HILBGEN_DEFINE_ERROR(DivisibilityViolation);
HILBGEN_DEFINE_ERROR(MissingLocalFactor);
HILBGEN_DEFINE_ERROR(InconsistentDerivation);
HILBGEN_DEFINE_ERROR(ConvergenceDomain);
HILBGEN_DEFINE_ERROR(NumericallySingular);
HILBGEN_DEFINE_ERROR(EmptySample);
HILBGEN_DEFINE_ERROR(ParseError);

#undef HILBGEN_DEFINE_ERROR

} // namespace hilbgen
