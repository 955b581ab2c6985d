#pragma once

#include <stdexcept>
#include <string>

namespace evenlat {

/// Malformed input (files, JSON, matrix shapes coming from outside).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An operation was called outside its domain (singular matrix, odd lattice, ...).
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A brute-force search refused to run because the input is too large.
class GuardExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace evenlat
