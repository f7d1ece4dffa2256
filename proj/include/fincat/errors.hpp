#pragma once

#include <stdexcept>
#include <string>

namespace fincat {

/// Base of every error raised by the library.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Two objects or morphisms from different backends were combined.
class BackendMismatch : public Error
{
public:
    using Error::Error;
};

/// compose(g, f) with cod(f) != dom(g), or spans that do not share the middle object.
class CompositionMismatch : public Error
{
public:
    using Error::Error;
};

/// pullback(f, g) with cod(f) != cod(g).
class CospanMismatch : public Error
{
public:
    using Error::Error;
};

/// An operation was called outside its documented domain (e.g. a non-mono where a mono is required).
class PreconditionViolation : public Error
{
public:
    using Error::Error;
};

/// A table or map failed structural validation.
class InvalidStructure : public Error
{
public:
    using Error::Error;
};

/// An object exceeded the size bound of its backend.
class BoundExceeded : public Error
{
public:
    using Error::Error;
};

/// A cross-check between two independent computations disagreed.
class InvariantViolation : public Error
{
public:
    using Error::Error;
};

} // namespace fincat
