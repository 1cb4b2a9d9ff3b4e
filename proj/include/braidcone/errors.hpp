#ifndef BRAIDCONE_ERRORS_HPP
#define BRAIDCONE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace braidcone {

/// Base class of everything this library throws.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Problems caused by the data handed to us (bad files, bad posets,
/// requests outside configured limits).  The CLI maps these to exit code 1.
struct InputError : Error {
    using Error::Error;
};

/// Violations of internal invariants or misuse of the library API.
/// The CLI maps these to exit code 2.
struct LogicError : Error {
    using Error::Error;
};

struct CycleError : InputError {
    using InputError::InputError;
};

struct DisconnectedError : InputError {
    using InputError::InputError;
};

struct TooSmallError : InputError {
    using InputError::InputError;
};

struct CapExceededError : InputError {
    using InputError::InputError;
};

/// The poset has no unique maximum element but one is required.
struct NoMaxError : InputError {
    using InputError::InputError;
};

/// The induced subgraph on M_P contains a cycle, so the tree relation
/// is not defined.
struct NotAcyclicError : InputError {
    using InputError::InputError;
};

/// The iterative decision procedure needs a minimum or a maximum element.
struct NotApplicableError : InputError {
    using InputError::InputError;
};

struct ParseError : InputError {
    ParseError(const std::string& msg, int line_, int column_)
        : InputError(msg), line(line_), column(column_) {}
    int line;
    int column;
};

struct NotUpsetError : LogicError {
    using LogicError::LogicError;
};

struct IndexMismatchError : LogicError {
    using LogicError::LogicError;
};

/// The tree-relation quotient failed to be a poset.  This is proved
/// impossible whenever the quotient is taken, so seeing it means a bug.
struct QuotientNotPosetError : LogicError {
    using LogicError::LogicError;
};

struct InternalError : LogicError {
    using LogicError::LogicError;
};

} // namespace braidcone

#endif
