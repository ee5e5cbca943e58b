#ifndef EQUITANGENT_ERRORS_HPP
#define EQUITANGENT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace equitangent {

/// Bad or malformed input (files, JSON, flag combinations). CLI exit code 1.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A mathematical precondition of an operation is violated. CLI exit code 2.
struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A computation failed numerically at runtime. CLI exit code 3.
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define EQUITANGENT_DEFINE_ERROR(Name, Base)                                  \
    struct Name : Base {                                                      \
        explicit Name(const std::string& what_arg = #Name) : Base(what_arg) {}\
    }

EQUITANGENT_DEFINE_ERROR(DegenerateCircle, PreconditionError);
EQUITANGENT_DEFINE_ERROR(FramingViolated, PreconditionError);
EQUITANGENT_DEFINE_ERROR(DegeneratePolygon, PreconditionError);
EQUITANGENT_DEFINE_ERROR(EvenOrder, PreconditionError);
EQUITANGENT_DEFINE_ERROR(OddOrder, PreconditionError);
EQUITANGENT_DEFINE_ERROR(NoFraming, PreconditionError);
EQUITANGENT_DEFINE_ERROR(EqualSignedRadii, PreconditionError);
EQUITANGENT_DEFINE_ERROR(InconsistentClosure, PreconditionError);
EQUITANGENT_DEFINE_ERROR(NonGenericChain, PreconditionError);
EQUITANGENT_DEFINE_ERROR(NonGenericFramedPolygon, PreconditionError);
EQUITANGENT_DEFINE_ERROR(VanishingSine, PreconditionError);
EQUITANGENT_DEFINE_ERROR(SingularAngle, PreconditionError);
EQUITANGENT_DEFINE_ERROR(NotHorizontal, PreconditionError);
EQUITANGENT_DEFINE_ERROR(UnsupportedN, PreconditionError);
EQUITANGENT_DEFINE_ERROR(InfeasibleRadii, PreconditionError);
EQUITANGENT_DEFINE_ERROR(PointInside, PreconditionError);
EQUITANGENT_DEFINE_ERROR(ConcentricCircles, PreconditionError);

EQUITANGENT_DEFINE_ERROR(OrientationObstruction, NumericalError);
EQUITANGENT_DEFINE_ERROR(StepTooLarge, NumericalError);
EQUITANGENT_DEFINE_ERROR(NonGeometric, NumericalError);
EQUITANGENT_DEFINE_ERROR(InvariantLost, NumericalError);
EQUITANGENT_DEFINE_ERROR(NoReturn, NumericalError);
EQUITANGENT_DEFINE_ERROR(NoTangent, NumericalError);

#undef EQUITANGENT_DEFINE_ERROR

} // namespace equitangent

#endif // EQUITANGENT_ERRORS_HPP
