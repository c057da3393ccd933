#pragma once

#include <stdexcept>
#include <string>

namespace bchlab {

enum class ErrorKind {
    BudgetExceeded,
    NotCoprime,
    OutOfRange,
    SpecMismatch,
    DivisionByZero,
    FieldMismatch,
    ConjugateRoots,
    DivisibilityViolation,
    NonIntegerResult,
    ConditionViolated,
    ParityMismatch,
    UnknownSuite,
    Internal,
};

const char* to_string(ErrorKind kind);

/// Library-wide exception carrying a machine-checkable kind.
class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

inline void require(bool condition, ErrorKind kind, const std::string& message) {
    if (!condition) fail(kind, message);
}

}  // namespace bchlab
