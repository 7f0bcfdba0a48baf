#ifndef TSL_ERRORS_HPP
#define TSL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tsl {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class NotPositiveDefinite : public Error {
public:
    using Error::Error;
};

class NotPrimitive : public Error {
public:
    using Error::Error;
};

class InvalidPrime : public Error {
public:
    using Error::Error;
};

/// An enumeration or search exceeded its configured budget; results are never truncated silently.
class ResourceCapExceeded : public Error {
public:
    using Error::Error;
};

class HypothesisFailed : public Error {
public:
    using Error::Error;
};

class MsNotFound : public Error {
public:
    using Error::Error;
};

class NoProgress : public Error {
public:
    using Error::Error;
};

} // namespace tsl

#endif
