#pragma once

#include <stdexcept>
#include <string>

namespace bramble {

/// Caller handed us something malformed: bad indices, violated preconditions,
/// unparseable documents. Maps to CLI exit code 2.
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// A size guard tripped: the requested computation is outside the supported
/// desk scale (e.g. well-linkedness beyond |A| = 8). Maps to CLI exit code 3.
class GuardError : public std::runtime_error {
public:
    explicit GuardError(const std::string& what) : std::runtime_error(what) {}
};

/// An invariant that is a theorem given valid inputs failed to hold. Never
/// expected to fire; if it does, the library itself is wrong.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace bramble
