#pragma once

#include <stdexcept>
#include <string>

namespace eap {

/// Base class for all errors thrown by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Material construction rejected: negative moduli or a zero-stiffness model.
class DegenerateMaterial : public Error {
public:
    using Error::Error;
};

/// Electric load rejected: nonpositive permittivity/thickness, negative
/// voltage or activation, or non-finite input.
class InvalidLoad : public Error {
public:
    using Error::Error;
};

/// Stretch state rejected: nonpositive or non-finite principal stretch.
class InvalidStretch : public Error {
public:
    using Error::Error;
};

/// Argument outside an operation's stated domain (bad range, count < 2, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// A response function returned a non-finite value.
class MaterialEvaluationError : public Error {
public:
    using Error::Error;
};

/// A bracketed solve failed; the message carries bracket diagnostics.
class SolverError : public Error {
public:
    using Error::Error;
};

}  // namespace eap
