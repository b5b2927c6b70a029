#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace framerole {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed textual input. line is 1-based; 0 means "no single line to blame".
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& reason)
        : Error(line ? "line " + std::to_string(line) + ": " + reason : reason),
          line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// A dependency graph that violates the tree invariants (root count, head
// uniqueness, reachability).
class TreeError : public Error {
public:
    using Error::Error;
};

// Subsumption closure (role chains or frame hierarchy) contains a cycle.
class CycleError : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    ConfigError(std::size_t line, const std::string& reason)
        : Error("line " + std::to_string(line) + ": " + reason), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

class UnknownTokenError : public Error {
public:
    using Error::Error;
};

class UnknownRoleError : public Error {
public:
    using Error::Error;
};

class MismatchedSentenceError : public Error {
public:
    using Error::Error;
};

// A CoNLL-2009 sentence whose APRED column count disagrees with its
// predicate count.
class ColumnCountError : public ParseError {
public:
    using ParseError::ParseError;
};

class NetworkError : public Error {
public:
    using Error::Error;
};

class CacheWriteError : public Error {
public:
    using Error::Error;
};

}  // namespace framerole
