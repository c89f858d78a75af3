#pragma once

#include <stdexcept>
#include <string>

namespace invharm {

/// Input violates a documented precondition (parity, range, size mismatch).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured enumeration or table-size bound would be exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal mathematical invariant failed; always a bug, never bad input.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace invharm
