#pragma once

#include <stdexcept>
#include <string>

namespace muse {

// Base for all library errors so callers can catch muse::Error alone.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Fixed-width arithmetic would lose bits (add/sub/mul/shift out of range).
class OverflowError : public Error {
public:
    explicit OverflowError(const std::string& what) : Error(what) {}
};

// Argument outside the operation's domain (even divisor, bad geometry, ...).
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

// Data value does not fit the code's capacity.
class CapacityError : public Error {
public:
    explicit CapacityError(const std::string& what) : Error(what) {}
};

// Two error patterns mapped to the same lookup key; multiplier is unusable.
class CollisionError : public Error {
public:
    explicit CollisionError(const std::string& what) : Error(what) {}
};

// Malformed text/binary input (spec files, containers, CSV).
class FormatError : public Error {
public:
    explicit FormatError(const std::string& what) : Error(what) {}
};

} // namespace muse
