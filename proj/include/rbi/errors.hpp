#pragma once

#include <stdexcept>
#include <string>

namespace rbi {

/// Base class for every failure raised by the workbench.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define RBI_DEFINE_ERROR(Name)              \
  class Name : public Error {               \
   public:                                  \
    using Error::Error;                     \
    Name() : Error(#Name) {}                \
  }

RBI_DEFINE_ERROR(ZeroDenominator);
RBI_DEFINE_ERROR(DegenerateSpectrum);
RBI_DEFINE_ERROR(NotTriangular);
RBI_DEFINE_ERROR(Singular);
RBI_DEFINE_ERROR(Inconsistent);
RBI_DEFINE_ERROR(UnknownGenerator);
RBI_DEFINE_ERROR(MixedAlgebras);
RBI_DEFINE_ERROR(VariableMismatch);
RBI_DEFINE_ERROR(NotScalar);
RBI_DEFINE_ERROR(NotPolynomialPreserving);
RBI_DEFINE_ERROR(NotSymmetric);
RBI_DEFINE_ERROR(NotDivisible);
RBI_DEFINE_ERROR(ParseError);
RBI_DEFINE_ERROR(UnknownSymbol);
RBI_DEFINE_ERROR(UnknownSuite);
RBI_DEFINE_ERROR(ConfigError);

#undef RBI_DEFINE_ERROR

}  // namespace rbi
