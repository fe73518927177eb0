#pragma once

#include <stdexcept>
#include <string>

namespace adhm {

// Base of every domain error raised by the library. `kind()` is the stable
// machine-readable name used in CLI reports.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define ADHM_DEFINE_ERROR(Name)                                     \
  class Name : public Error {                                       \
   public:                                                          \
    explicit Name(const std::string& what) : Error(#Name, what) {}  \
  };

ADHM_DEFINE_ERROR(DimensionMismatch)
ADHM_DEFINE_ERROR(ParseError)
ADHM_DEFINE_ERROR(SingularMatrix)
ADHM_DEFINE_ERROR(SingularGroupElement)
ADHM_DEFINE_ERROR(NotSquare)
ADHM_DEFINE_ERROR(NonCommuting)
ADHM_DEFINE_ERROR(IrrationalSpectrum)
ADHM_DEFINE_ERROR(PointOnExceptionalLine)
ADHM_DEFINE_ERROR(IncidenceViolation)
ADHM_DEFINE_ERROR(IndexOutOfRange)
ADHM_DEFINE_ERROR(OverlapViolation)
ADHM_DEFINE_ERROR(PreconditionViolation)
ADHM_DEFINE_ERROR(InfeasibleSpec)

#undef ADHM_DEFINE_ERROR

}  // namespace adhm
