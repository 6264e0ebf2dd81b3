#pragma once

#include <stdexcept>
#include <string>

namespace zerosum {

enum class ErrorKind {
    InvalidArgument,          // malformed or out-of-range input
    DomainRejected,           // input outside a construction's or characterization's regime
    NotExtremal,              // a sequence claimed extremal is not
    CharacterizationViolated, // an extremal sequence fails the structural characterization
    Internal,                 // an invariant the library guarantees was broken
};

[[nodiscard]] const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool condition, const std::string& what) {
    if (!condition) fail(ErrorKind::InvalidArgument, what);
}

} // namespace zerosum
