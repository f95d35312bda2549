#pragma once

#include <stdexcept>
#include <string>

namespace ratingsde {

/// A mathematical invariant that should hold by construction was violated.
/// Signals a bug or corrupt internal state, not bad user input.
class invariant_error : public std::runtime_error {
public:
    explicit invariant_error(const std::string& what) : std::runtime_error(what) {}
};

/// Unreadable, missing or malformed input data.
class io_error : public std::runtime_error {
public:
    explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

/// Caller passed arguments outside the operation's domain.
class argument_error : public std::runtime_error {
public:
    explicit argument_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace ratingsde
