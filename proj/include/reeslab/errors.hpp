#pragma once
#include <stdexcept>
#include <string>

namespace reeslab {

// Input errors map to CLI exit code 1, invariant violations to 2,
// budget exhaustion to 3.
enum class ErrorKind { Input, Invariant, Budget };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const char* name, const std::string& what)
      : std::runtime_error(std::string(name) + ": " + what), kind_(kind), name_(name) {}
  ErrorKind kind() const { return kind_; }
  const char* name() const { return name_; }

 private:
  ErrorKind kind_;
  const char* name_;
};

#define REESLAB_DEFINE_ERROR(Name, Kind)                                  \
  struct Name : Error {                                                   \
    explicit Name(const std::string& w) : Error(ErrorKind::Kind, #Name, w) {} \
  };

REESLAB_DEFINE_ERROR(ParseError, Input)
REESLAB_DEFINE_ERROR(ShapeError, Input)
REESLAB_DEFINE_ERROR(SlopeError, Input)
REESLAB_DEFINE_ERROR(WidthError, Input)
REESLAB_DEFINE_ERROR(RangeError, Input)
REESLAB_DEFINE_ERROR(LevelError, Input)
REESLAB_DEFINE_ERROR(ContextMismatch, Input)
REESLAB_DEFINE_ERROR(ContextError, Input)
REESLAB_DEFINE_ERROR(NotAUnit, Input)
REESLAB_DEFINE_ERROR(ClaimViolation, Invariant)
REESLAB_DEFINE_ERROR(DegenerateError, Invariant)
REESLAB_DEFINE_ERROR(InconsistencyError, Invariant)
REESLAB_DEFINE_ERROR(TheoremViolation, Invariant)
REESLAB_DEFINE_ERROR(BudgetExceeded, Budget)

#undef REESLAB_DEFINE_ERROR

}  // namespace reeslab
