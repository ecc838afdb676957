#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace linposet {

enum class ErrorKind {
    DuplicateElement,
    UnknownElement,
    CycleDetected,
    NotALattice,
    ArityMismatch,
    EmptyPoset,
    MismatchedPoset,
    MixedArity,
    LinearLattice,
    ProjectionNotOrderPreserving,
    TooLarge,
    ParseError,
    MissingTuple,
    EmptyInput,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library. `kind()` identifies the error class;
/// `line()` is the 1-based input line for parse-level errors, 0 otherwise.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message, std::size_t line = 0);

    ErrorKind kind() const noexcept { return kind_; }
    std::size_t line() const noexcept { return line_; }

private:
    ErrorKind kind_;
    std::size_t line_;
};

}  // namespace linposet
