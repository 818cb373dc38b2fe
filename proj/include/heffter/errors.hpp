#pragma once

#include <stdexcept>
#include <string>

namespace heffter {

/// Construction or query parameters outside the admissible region.
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Two construction formulas tried to fill the same cell.
class CollisionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A search ran out of candidates without finding a solution.
class SearchExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A node or time budget ran out before the search could decide.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The chosen shift of the three-diagonal array puts 2n-1 (or another
/// excluded value) in a forbidden position of column 0.
class ExclusionViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An artifact the pipeline produced failed its own verification.
class VerificationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input exceeds the desk-scale limits (refused unless forced).
class GuardrailError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed array / face document.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace heffter
