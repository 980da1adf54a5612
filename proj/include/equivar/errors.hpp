#pragma once

#include <stdexcept>
#include <string>

namespace equivar {

/// Base class for every error raised by the workbench.
struct WorkbenchError : std::runtime_error {
    explicit WorkbenchError(const std::string& what) : std::runtime_error(what) {}
};

/// Two values over different prime fields (or coefficient rings) were combined.
struct ModulusMismatch : WorkbenchError {
    explicit ModulusMismatch(const std::string& what) : WorkbenchError(what) {}
};

/// Dimensions of matrices / hom-spaces / component lists do not line up.
struct ShapeMismatch : WorkbenchError {
    explicit ShapeMismatch(const std::string& what) : WorkbenchError(what) {}
};

/// A brute-force enumeration would exceed the configured cap.
struct SearchSpaceTooLarge : WorkbenchError {
    explicit SearchSpaceTooLarge(const std::string& what) : WorkbenchError(what) {}
};

/// A constructor argument is outside the supported desk-scale range.
struct LimitExceeded : WorkbenchError {
    explicit LimitExceeded(const std::string& what) : WorkbenchError(what) {}
};

/// A multiplication table fails the group axioms.
struct NotAGroup : WorkbenchError {
    explicit NotAGroup(const std::string& what) : WorkbenchError(what) {}
};

/// A linear system that the theory promises solvable turned out not to be,
/// which signals invalid input data rather than a math failure.
struct NotSolvable : WorkbenchError {
    explicit NotSolvable(const std::string& what) : WorkbenchError(what) {}
};

/// Two lax functors with incompatible orientation were combined.
struct SideMismatch : WorkbenchError {
    explicit SideMismatch(const std::string& what) : WorkbenchError(what) {}
};

/// The three equivalent weakness conditions disagreed on an instance.
/// This cannot happen for correctly encoded data; it indicates a bug.
struct InconsistentLemma : WorkbenchError {
    explicit InconsistentLemma(const std::string& what) : WorkbenchError(what) {}
};

/// Malformed workbench document.
struct ParseError : WorkbenchError {
    explicit ParseError(const std::string& what) : WorkbenchError(what) {}
};

/// An operation was called with data violating its stated precondition.
struct PreconditionFailed : WorkbenchError {
    explicit PreconditionFailed(const std::string& what) : WorkbenchError(what) {}
};

} // namespace equivar
