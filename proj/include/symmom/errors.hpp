#ifndef SYMMOM_ERRORS_HPP
#define SYMMOM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace symmom {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OracleBoundExceeded : Error {
    using Error::Error;
};
struct ExactRangeExceeded : Error {
    using Error::Error;
};
struct FormatError : Error {
    using Error::Error;
};
struct InvariantViolation : Error {
    using Error::Error;
};
struct OutOfRange : Error {
    using Error::Error;
};
struct NotPositiveDefinite : Error {
    using Error::Error;
};
struct InvalidDiscriminant : Error {
    using Error::Error;
};
struct NonFundamentalDiscriminant : Error {
    using Error::Error;
};
struct HypothesisViolated : Error {
    using Error::Error;
};
struct InsufficientSamples : Error {
    using Error::Error;
};

} // namespace symmom

#endif
