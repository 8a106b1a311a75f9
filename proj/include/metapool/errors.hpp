#pragma once

#include <stdexcept>
#include <string>

namespace metapool {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// -- ingest / validation --------------------------------------------------

class NonMonotoneError : public Error {
public:
    using Error::Error;
};

class NonFiniteError : public Error {
public:
    using Error::Error;
};

class NegativeForCountMeasureError : public Error {
public:
    using Error::Error;
};

class DuplicateKeyError : public Error {
public:
    using Error::Error;
};

class EmptyGroupError : public Error {
public:
    using Error::Error;
};

// -- estimate preparation --------------------------------------------------

class ZeroIqrError : public Error {
public:
    using Error::Error;
};

class GammaFitError : public Error {
public:
    using Error::Error;
};

// -- optimization / special functions ---------------------------------------

class InvalidBoundsError : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

// -- pooling ----------------------------------------------------------------

class TooFewModelsError : public Error {
public:
    using Error::Error;
};

// -- reliability ------------------------------------------------------------

class TooShortError : public Error {
public:
    using Error::Error;
};

class TooFewSubareasError : public Error {
public:
    using Error::Error;
};

// -- reporting / io -----------------------------------------------------------

class EmptyRowsError : public Error {
public:
    using Error::Error;
};

/// Parse failure with accumulated line-numbered diagnostics.
class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace metapool
