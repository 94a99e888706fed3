#pragma once

#include <stdexcept>
#include <string>

namespace aif {

/// Invalid parameters: out-of-range elements, mismatched (n,k), malformed sets.
class ParamError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed family JSON or other textual input.
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A formula was evaluated outside the range where it is defined.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Some member has two or more disjoint partners.
class NotAlmostIntersectingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The request would enumerate or allocate more than we allow.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operation exists but not for these parameters (e.g. k != 3 for D-sets).
class UnsupportedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace aif
