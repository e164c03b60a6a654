#pragma once

#include <stdexcept>
#include <string>

namespace reglab {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define REGLAB_DEFINE_ERROR(Name)          \
  class Name : public Error {              \
   public:                                 \
    using Error::Error;                    \
  }

// exact_series
REGLAB_DEFINE_ERROR(ZeroConstantTerm);
REGLAB_DEFINE_ERROR(ConstantTermNotOne);

// weierstrass / gauss_manin
REGLAB_DEFINE_ERROR(IsotrivialFamily);
REGLAB_DEFINE_ERROR(NotMinimal);
REGLAB_DEFINE_ERROR(NonIntegralEpsilon);
REGLAB_DEFINE_ERROR(UnsupportedL);

// numerics
REGLAB_DEFINE_ERROR(PrecisionNotReached);
REGLAB_DEFINE_ERROR(RootOrderingFailed);
REGLAB_DEFINE_ERROR(DomainError);
REGLAB_DEFINE_ERROR(QuadratureNotConverged);

#undef REGLAB_DEFINE_ERROR

}  // namespace reglab
