#pragma once

#include <stdexcept>
#include <string>

namespace svol {

// Base class for every error raised by the library; the CLI maps these to exit codes.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define SVOL_DEFINE_ERROR(Name)                   \
    struct Name : Error {                         \
        explicit Name(const std::string& what)    \
            : Error(std::string(#Name ": ") + what) {} \
    }

SVOL_DEFINE_ERROR(DivisionByZeroQNumber);
SVOL_DEFINE_ERROR(PoleAtSample);
SVOL_DEFINE_ERROR(HalfIntegerParity);
SVOL_DEFINE_ERROR(ZeroPolynomial);
SVOL_DEFINE_ERROR(UnrepresentableParity);
SVOL_DEFINE_ERROR(InvalidSpec);
SVOL_DEFINE_ERROR(RankOutOfRange);
SVOL_DEFINE_ERROR(NonDivisible);
SVOL_DEFINE_ERROR(NegativeCoordinate);
SVOL_DEFINE_ERROR(NotAVertex);
SVOL_DEFINE_ERROR(UnsupportedCoset);
SVOL_DEFINE_ERROR(InvalidConfig);
SVOL_DEFINE_ERROR(ReconciliationFailure);

#undef SVOL_DEFINE_ERROR

}  // namespace svol
