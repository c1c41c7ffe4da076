#pragma once

#include <stdexcept>
#include <string>

namespace jacobi {

// Bad input: shapes, weights, flags. The CLI maps these to exit code 1.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A computation that ran but could not certify its result. Exit code 2.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define JACOBI_DEFINE_ERROR(Name, Base)                                   \
    class Name : public Base {                                            \
    public:                                                               \
        explicit Name(const std::string& what) : Base(#Name ": " + what) {} \
    };

JACOBI_DEFINE_ERROR(InvalidArgument, ValidationError)
JACOBI_DEFINE_ERROR(WeightMismatch, ValidationError)
JACOBI_DEFINE_ERROR(ShapeMismatch, ValidationError)
JACOBI_DEFINE_ERROR(TableMismatch, ValidationError)
JACOBI_DEFINE_ERROR(InadmissibleMultiplier, ValidationError)
JACOBI_DEFINE_ERROR(NotParabolic, ValidationError)
JACOBI_DEFINE_ERROR(UnsupportedElement, ValidationError)
JACOBI_DEFINE_ERROR(MissingCoset, ValidationError)

JACOBI_DEFINE_ERROR(NonConvergent, NumericalError)
JACOBI_DEFINE_ERROR(DegeneratePoint, NumericalError)
JACOBI_DEFINE_ERROR(SnapFailure, NumericalError)
JACOBI_DEFINE_ERROR(VerificationFailure, NumericalError)
JACOBI_DEFINE_ERROR(RankAmbiguous, NumericalError)
JACOBI_DEFINE_ERROR(QuadratureNotConverged, NumericalError)
JACOBI_DEFINE_ERROR(StencilOutOfDomain, NumericalError)

#undef JACOBI_DEFINE_ERROR

}  // namespace jacobi
