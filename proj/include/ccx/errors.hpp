#ifndef CCX_ERRORS_HPP
#define CCX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ccx {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Polynomial text could not be lexed/parsed; position is 1-based.
struct ParseError : Error {
    ParseError(std::string msg, int line_, int col_)
        : Error(std::move(msg)), line(line_), col(col_) {}
    int line;
    int col;
};

// divide_by_linear got a divisor that is not of total degree 1.
struct DegreeError : Error {
    using Error::Error;
};

struct NotInCatalog : Error {
    using Error::Error;
};

// Skew-normalization input assigns conflicting signed values to one tuple.
struct InconsistentSkewData : Error {
    using Error::Error;
};

struct ModuleMismatch : Error {
    using Error::Error;
};

struct NonHomogeneous : Error {
    using Error::Error;
};

struct TargetSliceOverflow : Error {
    using Error::Error;
};

// A truncated computation gave different answers at bounds D and D+1.
struct UnstableBound : Error {
    UnstableBound(std::string msg, int bound_) : Error(std::move(msg)), bound(bound_) {}
    int bound;
};

struct CocycleCheckFailed : Error {
    using Error::Error;
};

// A construction needs a symbol to be invertible (e.g. the scalar of a
// one-dimensional module) and the request supplied zero instead.
struct SideConditionError : Error {
    using Error::Error;
};

} // namespace ccx

#endif
