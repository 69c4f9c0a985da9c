#pragma once

#include <stdexcept>
#include <string>

namespace l2b {

enum class ErrorKind {
    dimension_mismatch,
    antisymmetry,
    malformed_permutation,
    condition_b,
    degenerate_core,
    bad_rational,
    syntax,
    range,
    unknown_kind,
    unknown_field,
    unsupported,
    unknown_name,
    retry_exhausted,
    singular,
    io,
};

inline const char *to_string(ErrorKind k) {
    switch (k) {
    case ErrorKind::dimension_mismatch: return "dimension_mismatch";
    case ErrorKind::antisymmetry: return "antisymmetry";
    case ErrorKind::malformed_permutation: return "malformed_permutation";
    case ErrorKind::condition_b: return "condition_b";
    case ErrorKind::degenerate_core: return "degenerate_core";
    case ErrorKind::bad_rational: return "bad_rational";
    case ErrorKind::syntax: return "syntax";
    case ErrorKind::range: return "range";
    case ErrorKind::unknown_kind: return "unknown_kind";
    case ErrorKind::unknown_field: return "unknown_field";
    case ErrorKind::unsupported: return "unsupported";
    case ErrorKind::unknown_name: return "unknown_name";
    case ErrorKind::retry_exhausted: return "retry_exhausted";
    case ErrorKind::singular: return "singular";
    case ErrorKind::io: return "io";
    }
    return "unknown";
}

/// Every failure in the kernel is reported through this exception; `kind()`
/// lets callers (notably the CLI) map failures to exit codes.
class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string &what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

} // namespace l2b
