#pragma once

#include <stdexcept>
#include <string>

namespace weylkit {

/// Base of every error raised by the library. `name()` is the stable
/// identifier printed by the CLI; `internal()` separates user-facing domain
/// errors from invariant violations that indicate a bug.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* name() const noexcept = 0;
  virtual bool internal() const noexcept { return false; }
};

#define WEYLKIT_DOMAIN_ERROR(Name)                                      \
  class Name : public Error {                                           \
   public:                                                              \
    using Error::Error;                                                 \
    const char* name() const noexcept override { return #Name; }        \
  }

#define WEYLKIT_INTERNAL_ERROR(Name)                                    \
  class Name : public Error {                                           \
   public:                                                              \
    using Error::Error;                                                 \
    const char* name() const noexcept override { return #Name; }        \
    bool internal() const noexcept override { return true; }            \
  }

WEYLKIT_DOMAIN_ERROR(NotFiniteType);
WEYLKIT_DOMAIN_ERROR(IndexOutOfRange);
WEYLKIT_DOMAIN_ERROR(RankMismatch);
WEYLKIT_DOMAIN_ERROR(NotDivisible);
WEYLKIT_DOMAIN_ERROR(NotInvariant);
WEYLKIT_DOMAIN_ERROR(ParseError);
WEYLKIT_DOMAIN_ERROR(SingularMatrix);
WEYLKIT_DOMAIN_ERROR(SafetyBoundExceeded);

WEYLKIT_INTERNAL_ERROR(InvariantViolation);
WEYLKIT_INTERNAL_ERROR(WordMismatch);
WEYLKIT_INTERNAL_ERROR(SolveFailed);
WEYLKIT_INTERNAL_ERROR(NonTermination);
WEYLKIT_INTERNAL_ERROR(FreenessCheckFailed);
WEYLKIT_INTERNAL_ERROR(BoxExhausted);

#undef WEYLKIT_DOMAIN_ERROR
#undef WEYLKIT_INTERNAL_ERROR

}  // namespace weylkit
