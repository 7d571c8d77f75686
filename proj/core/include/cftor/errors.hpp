#pragma once

#include <stdexcept>
#include <string>

namespace cftor {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define CFTOR_DEFINE_ERROR(NAME)                                               \
    class NAME : public Error {                                                \
    public:                                                                    \
        using Error::Error;                                                    \
    }

CFTOR_DEFINE_ERROR(ParseError);
CFTOR_DEFINE_ERROR(DivisionByZero);
CFTOR_DEFINE_ERROR(OddDegreeError);
CFTOR_DEFINE_ERROR(NonSquareLeadingCoefficientError);
CFTOR_DEFINE_ERROR(PerfectSquareError);
CFTOR_DEFINE_ERROR(PrecisionLossError);
CFTOR_DEFINE_ERROR(NotPeriodicError);
CFTOR_DEFINE_ERROR(GenusMismatchError);
CFTOR_DEFINE_ERROR(FormViolationError);
CFTOR_DEFINE_ERROR(ZeroDenominatorError);
CFTOR_DEFINE_ERROR(InexactDivisionError);
CFTOR_DEFINE_ERROR(EmptyRangeError);
CFTOR_DEFINE_ERROR(ConstraintViolatedError);
CFTOR_DEFINE_ERROR(NonvanishingViolatedError);
CFTOR_DEFINE_ERROR(RoundTripFailedError);
CFTOR_DEFINE_ERROR(NotSymmetricError);
CFTOR_DEFINE_ERROR(NotSexticError);
CFTOR_DEFINE_ERROR(SingularCurveError);
CFTOR_DEFINE_ERROR(DegenerateFamilyError);
CFTOR_DEFINE_ERROR(UnverifiedRecordError);
CFTOR_DEFINE_ERROR(StorageError);
CFTOR_DEFINE_ERROR(InternalError);

#undef CFTOR_DEFINE_ERROR

} // namespace cftor
