#pragma once

#include <stdexcept>
#include <string>

namespace motivic {

// Two error families, matching the CLI exit codes: ValidationError (and
// subclasses) means the input itself is malformed or violates a declared
// invariant; ComputationError means a well-formed input failed an analysis
// precondition (degenerate Gram matrix, broken walk, ...).

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ValidationError : public Error {
public:
    using Error::Error;
};

class ParseError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class ComputationError : public Error {
public:
    using Error::Error;
};

#define MOTIVIC_DEFINE_ERROR(Name, Base)                                      \
    class Name : public Base {                                                \
    public:                                                                   \
        explicit Name(const std::string& what)                                \
            : Base(std::string(#Name) + ": " + what) {}                       \
    }

MOTIVIC_DEFINE_ERROR(NotSymmetric, ValidationError);
MOTIVIC_DEFINE_ERROR(ShapeMismatch, ValidationError);
MOTIVIC_DEFINE_ERROR(UnknownComponentId, ValidationError);
MOTIVIC_DEFINE_ERROR(ZeroBase, ValidationError);
MOTIVIC_DEFINE_ERROR(FieldMismatch, ValidationError);
MOTIVIC_DEFINE_ERROR(NotSquarefree, ValidationError);
MOTIVIC_DEFINE_ERROR(NotIrrational, ValidationError);

MOTIVIC_DEFINE_ERROR(SingularMatrix, ComputationError);
MOTIVIC_DEFINE_ERROR(DegenerateGram, ComputationError);
MOTIVIC_DEFINE_ERROR(SupportAtNode, ComputationError);
MOTIVIC_DEFINE_ERROR(BrokenWalk, ComputationError);
MOTIVIC_DEFINE_ERROR(HypothesisViolated, ComputationError);
MOTIVIC_DEFINE_ERROR(PreconditionFailed, ComputationError);

#undef MOTIVIC_DEFINE_ERROR

} // namespace motivic
