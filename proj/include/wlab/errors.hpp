#pragma once

#include <stdexcept>
#include <string>

namespace wlab {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PoleError : Error {
    using Error::Error;
};
struct PoleOnPathError : Error {
    using Error::Error;
};
struct ConvergenceError : Error {
    using Error::Error;
};
struct QuadratureError : Error {
    using Error::Error;
};
struct SimplificationError : Error {
    using Error::Error;
};
struct DomainError : Error {
    using Error::Error;
};
struct BranchPointError : Error {
    using Error::Error;
};
struct FitAmbiguousError : Error {
    using Error::Error;
};
struct UnknownSurfaceError : Error {
    using Error::Error;
};
struct ParamRangeError : Error {
    using Error::Error;
};
struct TruncationError : Error {
    using Error::Error;
};
struct WeightMismatchError : Error {
    using Error::Error;
};
struct IndexError : Error {
    using Error::Error;
};

} // namespace wlab
