#ifndef ARGP_ERRORS_HPP
#define ARGP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace argp {

/// Input errors are caller mistakes (bad files, violated preconditions);
/// numerical errors are refusals to report a count that could be wrong.
enum class ErrorKind { Input, Numerical };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

#define ARGP_DEFINE_ERROR(Name, Kind)                                       \
  class Name : public Error {                                             \
   public:                                                                \
    explicit Name(const std::string& what) : Error(ErrorKind::Kind, what) {} \
  };

ARGP_DEFINE_ERROR(InputError, Input)
ARGP_DEFINE_ERROR(PreconditionViolated, Input)
ARGP_DEFINE_ERROR(DegreeZero, Input)
ARGP_DEFINE_ERROR(BoundaryCoefficientZero, Input)
ARGP_DEFINE_ERROR(NoConvergence, Numerical)
ARGP_DEFINE_ERROR(AmbiguousClassification, Numerical)
ARGP_DEFINE_ERROR(ZeroOnCurve, Numerical)
ARGP_DEFINE_ERROR(NonIntegerWinding, Numerical)
ARGP_DEFINE_ERROR(ResolutionTooCoarse, Numerical)
ARGP_DEFINE_ERROR(DetourFailed, Numerical)

#undef ARGP_DEFINE_ERROR

}  // namespace argp

#endif  // ARGP_ERRORS_HPP
