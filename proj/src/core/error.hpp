#pragma once

#include <stdexcept>
#include <string>

namespace pachgap {

// Error kinds map one-to-one onto C API status codes and CLI exit codes.
enum class ErrKind {
    Param = 1,        // bad argument (non-prime q, unknown id, malformed input)
    Precondition = 2, // contract violated (n below threshold, point outside image)
    Capacity = 3,     // enumeration would exceed a budget guard
    Io = 4,           // file or format trouble
    Verify = 5,       // an invariant or verification step failed
    Internal = 6,
};

class Error : public std::runtime_error {
  public:
    Error(ErrKind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
    ErrKind kind;
};

[[noreturn]] inline void throw_param(const std::string& m) { throw Error(ErrKind::Param, m); }
[[noreturn]] inline void throw_precondition(const std::string& m) { throw Error(ErrKind::Precondition, m); }
[[noreturn]] inline void throw_capacity(const std::string& m) { throw Error(ErrKind::Capacity, m); }
[[noreturn]] inline void throw_io(const std::string& m) { throw Error(ErrKind::Io, m); }
[[noreturn]] inline void throw_verify(const std::string& m) { throw Error(ErrKind::Verify, m); }
[[noreturn]] inline void throw_internal(const std::string& m) { throw Error(ErrKind::Internal, m); }

} // namespace pachgap
