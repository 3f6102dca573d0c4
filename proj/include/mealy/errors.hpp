#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mealy {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input: unknown names, out-of-range indices,
/// alphabet mismatches, bad parameters.
class InputError : public Error {
public:
    using Error::Error;
};

/// A construction that is undefined for the given machine (e.g. the inverse
/// of a non-invertible automaton).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A configured size cap was exceeded. Never a wrong answer, only no answer.
class ResourceError : public Error {
public:
    ResourceError(const std::string& what, std::size_t cap, std::size_t reached)
        : Error(what + " (cap " + std::to_string(cap) + ", reached " + std::to_string(reached) + ")"),
          cap_(cap), reached_(reached) {}

    std::size_t cap() const noexcept { return cap_; }
    std::size_t reached() const noexcept { return reached_; }

private:
    std::size_t cap_;
    std::size_t reached_;
};

} // namespace mealy
