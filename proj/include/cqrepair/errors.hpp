#pragma once

#include <stdexcept>
#include <string>

namespace cqr {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SyntaxError : Error {
    using Error::Error;
};
struct ConstantNotSupported : SyntaxError {
    using SyntaxError::SyntaxError;
};
struct SafetyViolation : Error {
    using Error::Error;
};
struct UnknownRelation : Error {
    using Error::Error;
};
struct ArityMismatch : Error {
    using Error::Error;
};
struct SchemaMismatch : Error {
    using Error::Error;
};
struct EmptySchema : Error {
    using Error::Error;
};
struct EmptyList : Error {
    using Error::Error;
};
struct EmptyPositives : Error {
    using Error::Error;
};
struct RepeatedHeadVariables : Error {
    using Error::Error;
};
struct InvalidDistribution : Error {
    using Error::Error;
};
struct NoFittingExists : Error {
    using Error::Error;
};
struct TimeoutError : Error {
    using Error::Error;
};

} // namespace cqr
