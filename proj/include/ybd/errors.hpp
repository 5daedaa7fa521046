#pragma once

#include <stdexcept>
#include <string>

namespace ybd {

// Base class for every failure the library can signal deliberately.
struct YbdError : std::runtime_error {
    explicit YbdError(const std::string& msg) : std::runtime_error(msg) {}
};

// Scalar arithmetic.
struct DivisionByZero : YbdError {
    explicit DivisionByZero(const std::string& msg = "division by zero") : YbdError(msg) {}
};
struct NotInvertible : YbdError {
    explicit NotInvertible(const std::string& msg = "element not invertible") : YbdError(msg) {}
};
struct IncompatibleMonoids : YbdError {
    explicit IncompatibleMonoids(const std::string& msg = "monomial flag mismatch") : YbdError(msg) {}
};
struct ScaleError : YbdError {
    explicit ScaleError(const std::string& msg = "value outside serializable range") : YbdError(msg) {}
};

// Operator algebra.
struct ShapeError : YbdError {
    explicit ShapeError(const std::string& msg = "dimension or kind mismatch") : YbdError(msg) {}
};

// Parameter handling.
struct ParamError : YbdError {
    explicit ParamError(const std::string& msg = "invalid parameter set") : YbdError(msg) {}
};
struct SpecError : YbdError {
    explicit SpecError(const std::string& msg = "invalid specification") : YbdError(msg) {}
};

// Constraint solving and deformation analysis.
struct Infeasible : YbdError {
    explicit Infeasible(const std::string& msg = "constraint system infeasible") : YbdError(msg) {}
};
struct ConstraintError : YbdError {
    explicit ConstraintError(const std::string& msg = "constraints violated") : YbdError(msg) {}
};
struct GaugeError : YbdError {
    explicit GaugeError(const std::string& msg = "gauge fixing inconsistent") : YbdError(msg) {}
};

// Classical-limit extraction.
struct ConventionError : YbdError {
    explicit ConventionError(const std::string& msg = "leading order is not the identity") : YbdError(msg) {}
};

} // namespace ybd
