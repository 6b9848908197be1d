#ifndef CHARHYP_ERRORS_HPP
#define CHARHYP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace charhyp {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotAGroupError : Error {
  explicit NotAGroupError(const std::string& reason) : Error("not a group: " + reason) {}
};

struct SizeLimitExceededError : Error {
  using Error::Error;
};

struct NotAnActionError : Error {
  explicit NotAnActionError(const std::string& reason) : Error("not an action: " + reason) {}
};

struct NotInSubgroupError : Error {
  using Error::Error;
};

struct DivisionByZeroError : Error {
  DivisionByZeroError() : Error("division by zero") {}
};

struct NotRationalError : Error {
  using Error::Error;
};

// Internal consistency check of the character-table computation failed.
struct LiftFailureError : Error {
  using Error::Error;
};

struct NonIntegralMultiplicityError : Error {
  using Error::Error;
};

struct ReciprocityViolationError : Error {
  using Error::Error;
};

struct NotNormalError : Error {
  using Error::Error;
};

struct NotNestedError : Error {
  using Error::Error;
};

struct StructureMismatchError : Error {
  using Error::Error;
};

struct InputError : Error {
  using Error::Error;
};

}  // namespace charhyp

#endif
