#pragma once

#include <stdexcept>
#include <string>

namespace torspec {

/// Malformed or out-of-contract input (unsupported type, bad weight string,
/// mismatched root data, ...). The CLI maps this to exit code 2.
class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

/// A configured resource bound (orbit size, module dimension) would be
/// exceeded. The CLI maps this to exit code 3.
class ResourceLimit : public std::runtime_error {
 public:
  explicit ResourceLimit(const std::string& what) : std::runtime_error(what) {}
};

/// 64-bit overflow in an exact computation. Results are never silently wrapped.
class ArithmeticOverflow : public std::overflow_error {
 public:
  explicit ArithmeticOverflow(const std::string& what) : std::overflow_error(what) {}
};

/// Broken internal invariant (e.g. a non-integral Freudenthal quotient).
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace torspec
