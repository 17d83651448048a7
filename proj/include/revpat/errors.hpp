#pragma once

#include <stdexcept>
#include <string>

namespace revpat {

/// Argument outside an operation's domain (bad symbol, empty word, range).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Malformed word or pattern text.
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Unknown generator name.
class RegistryError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Enumeration would exceed the configured resource guard.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operation not supported for this input (e.g. >2 variables in classify).
class UnsupportedError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace revpat
