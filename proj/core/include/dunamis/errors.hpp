#pragma once

#include <stdexcept>
#include <string>

namespace dunamis {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of Greek arithmetic (zero, a sign,
/// a non-squarefree kernel handed to a canonical constructor, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Text could not be parsed as a number, ratio or surd.
class ParseError : public Error {
public:
    using Error::Error;
};

/// The caller asserted something that does not hold, e.g. a false
/// proportion passed to alternation or a non-coprime pair passed where
/// lowest terms are required.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// A claimed equality is false. Raised by certification routines.
class FalseClaim : public Error {
public:
    using Error::Error;
};

/// A lemma that must always hold was observed to fail. Seeing this means an
/// arithmetic bug, never bad user input.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

/// A figure refers to an undefined point, or asks for a length that is not
/// exactly computable in the coordinate field.
class MalformedFigure : public Error {
public:
    using Error::Error;
};

}  // namespace dunamis
