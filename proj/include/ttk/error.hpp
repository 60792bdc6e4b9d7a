#pragma once

#include <stdexcept>
#include <string>

namespace ttk {

// Shape or length disagreement between operands.
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Argument outside the domain of a numeric map (e.g. g = 0 in g^mu).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Malformed or inconsistent input data (fans, Klyachko data, files).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A precondition of an operation is not met by otherwise well-formed input.
class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// An internal consistency check failed; indicates a bug, never bad input.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Specific failures named by the public operations.
class NoDualError : public DomainError {
public:
    using DomainError::DomainError;
};

class NotRingElementError : public DomainError {
public:
    using DomainError::DomainError;
};

class InvalidSimplexError : public InputError {
public:
    using InputError::InputError;
};

class DegenerationError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class NotHolomorphicError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

}  // namespace ttk
