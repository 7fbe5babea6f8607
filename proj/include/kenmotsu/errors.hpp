#pragma once

#include <stdexcept>
#include <string>

namespace kenmotsu {

/// Failure categories surfaced by the library.  Input-shape problems
/// (dimensions, parsing) are distinguished from mathematical failures so the
/// CLI can map them to its exit-code contract.
enum class ErrorKind {
    DimensionMismatch,
    IndexOutOfRange,
    EvenDimension,
    DegenerateMetric,
    DependentInput,
    NotHermitian,
    NoConvergence,
    SingularMap,
    AlmostContactViolation,
    KahlerViolation,
    NonAbelianComplement,
    ReconstructionMismatch,
    ParseError,
};

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

    /// True for errors caused by malformed or out-of-contract input rather
    /// than by a structure failing a mathematical property.
    bool is_input_error() const noexcept {
        switch (kind_) {
            case ErrorKind::DimensionMismatch:
            case ErrorKind::IndexOutOfRange:
            case ErrorKind::EvenDimension:
            case ErrorKind::DegenerateMetric:
            case ErrorKind::ParseError:
                return true;
            default:
                return false;
        }
    }

  private:
    ErrorKind kind_;
};

const char* to_string(ErrorKind kind);

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
    throw Error(kind, what);
}

} // namespace kenmotsu
