#pragma once

#include <stdexcept>
#include <string>

namespace davlab {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct InvalidSpecError : Error {
  using Error::Error;
};
struct NotNormalError : Error {
  using Error::Error;
};
struct NotSubgroupError : Error {
  using Error::Error;
};
struct EmptySequenceError : Error {
  using Error::Error;
};
struct GroupTooLargeError : Error {
  using Error::Error;
};
struct EngineLimitError : Error {
  using Error::Error;
};
struct BudgetExhaustedError : Error {
  using Error::Error;
};
struct UnsupportedError : Error {
  using Error::Error;
};
struct ModulusMismatchError : Error {
  using Error::Error;
};
struct BadMError : Error {
  using Error::Error;
};
struct NotDistinctError : Error {
  using Error::Error;
};
struct BadModulusError : Error {
  using Error::Error;
};
struct PreconditionViolatedError : Error {
  using Error::Error;
};
struct TooLargeError : Error {
  using Error::Error;
};
struct IoError : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};

}  // namespace davlab
