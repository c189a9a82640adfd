#pragma once

#include <stdexcept>
#include <string>

namespace permdef {

/// Malformed textual input (cycle notation, group specs, reports).
class ParseError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// An operation was called outside its contract (wrong degree, non-member
/// element, invalid family parameter, ...).
class PreconditionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A configured engine cap would be exceeded. Never a silent truncation.
class CapExceededError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A group with defect 0 or 1 matched no classification form, or an internal
/// cross-check failed. If this ever fires, either the engine or the
/// classification it verifies is wrong.
class InconsistencyError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

}  // namespace permdef
