#pragma once

#include <stdexcept>
#include <string>

namespace commentscope {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed textual input: unparseable URLs, snapshot lines, CSV rows,
/// buzzword query strings. Carries a human-readable location where known.
class ParseError : public Error {
public:
    using Error::Error;
};

/// Filesystem failures: missing files, unwritable paths.
class IoError : public Error {
public:
    using Error::Error;
};

/// A data invariant does not hold: orphan parent links, duplicate ids,
/// empty inputs where at least one record is required, mismatched lengths.
class InvariantError : public Error {
public:
    using Error::Error;
};

/// Numerical solver failures: degenerate response, singular weighted system.
class SolverError : public Error {
public:
    using Error::Error;
};

/// Network-level failure after the retry budget is spent.
class TransportError : public Error {
public:
    using Error::Error;
};

/// The API rejected the supplied credentials.
class AuthError : public Error {
public:
    using Error::Error;
};

/// The API reported an exhausted quota; not retried.
class QuotaError : public Error {
public:
    using Error::Error;
};

/// A response page could not be interpreted as a valid result page.
class TruncatedPageError : public Error {
public:
    using Error::Error;
};

}  // namespace commentscope
