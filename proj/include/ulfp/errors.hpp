#pragma once

#include <stdexcept>
#include <string>

namespace ulfp {

/// A documented precondition of an operation does not hold.
class PreconditionViolation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A curve has empty projection to an annulus (it is the core).
class EmptyProjection : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A hypothesis of a slice-cardinality theorem fails; the message names it.
class HypothesisViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Query vertices span more than one connected component.
class DisconnectedQuery : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed textual input (slopes, graph files, lists).
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace ulfp
