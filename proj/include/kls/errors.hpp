#pragma once

#include <stdexcept>
#include <string>

namespace kls {

// Base type for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define KLS_DEFINE_ERROR(Name)                                \
  struct Name : Error {                                       \
    explicit Name(const std::string& what) : Error(what) {}   \
  }

// Poset construction / structure
KLS_DEFINE_ERROR(CycleDetected);
KLS_DEFINE_ERROR(NotBounded);
KLS_DEFINE_ERROR(NotGraded);
KLS_DEFINE_ERROR(TooLarge);
KLS_DEFINE_ERROR(UnknownKind);
KLS_DEFINE_ERROR(ParameterOutOfRange);

// Polynomial arithmetic
KLS_DEFINE_ERROR(DegreeExceeded);
KLS_DEFINE_ERROR(NotDivisible);
KLS_DEFINE_ERROR(ZeroPolynomial);
KLS_DEFINE_ERROR(NotPalindromic);
KLS_DEFINE_ERROR(DegreeTooSmall);

// Incidence algebra / KLS
KLS_DEFINE_ERROR(PosetMismatch);
KLS_DEFINE_ERROR(NonUnitDiagonal);
KLS_DEFINE_ERROR(NotAKernel);
KLS_DEFINE_ERROR(AntisymmetryViolation);
KLS_DEFINE_ERROR(FormulaMismatch);

#undef KLS_DEFINE_ERROR

}  // namespace kls
