#include "linposet/error.hpp"

namespace linposet {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::DuplicateElement: return "DuplicateElement";
        case ErrorKind::UnknownElement: return "UnknownElement";
        case ErrorKind::CycleDetected: return "CycleDetected";
        case ErrorKind::NotALattice: return "NotALattice";
        case ErrorKind::ArityMismatch: return "ArityMismatch";
        case ErrorKind::EmptyPoset: return "EmptyPoset";
        case ErrorKind::MismatchedPoset: return "MismatchedPoset";
        case ErrorKind::MixedArity: return "MixedArity";
        case ErrorKind::LinearLattice: return "LinearLattice";
        case ErrorKind::ProjectionNotOrderPreserving: return "ProjectionNotOrderPreserving";
        case ErrorKind::TooLarge: return "TooLarge";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::MissingTuple: return "MissingTuple";
        case ErrorKind::EmptyInput: return "EmptyInput";
    }
    return "Unknown";
}

namespace {
std::string decorate(ErrorKind kind, const std::string& message, std::size_t line) {
    std::string out(to_string(kind));
    if (line != 0) out += " (line " + std::to_string(line) + ")";
    out += ": ";
    out += message;
    return out;
}
}  // namespace

Error::Error(ErrorKind kind, const std::string& message, std::size_t line)
    : std::runtime_error(decorate(kind, message, line)), kind_(kind), line_(line) {}

}  // namespace linposet
