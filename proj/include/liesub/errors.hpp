#pragma once

#include <stdexcept>
#include <string>

namespace liesub {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define LIESUB_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                       \
   public:                                                          \
    explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
  }

LIESUB_DEFINE_ERROR(DivisionByZero);
LIESUB_DEFINE_ERROR(FieldMismatch);
LIESUB_DEFINE_ERROR(NotAnEmbedding);
LIESUB_DEFINE_ERROR(InvalidCartanMatrix);
LIESUB_DEFINE_ERROR(InvalidType);
LIESUB_DEFINE_ERROR(NotDominant);
LIESUB_DEFINE_ERROR(NotToral);
LIESUB_DEFINE_ERROR(DegenerateRestriction);
LIESUB_DEFINE_ERROR(GramMismatch);
LIESUB_DEFINE_ERROR(NotInCartan);
LIESUB_DEFINE_ERROR(Undecided);
LIESUB_DEFINE_ERROR(NotZeroDimensional);
LIESUB_DEFINE_ERROR(DegenerateHPart);
LIESUB_DEFINE_ERROR(BudgetExceeded);
LIESUB_DEFINE_ERROR(NonIntegralEigenvalue);
LIESUB_DEFINE_ERROR(Infeasible);
LIESUB_DEFINE_ERROR(NotAChain);
LIESUB_DEFINE_ERROR(UnknownId);
LIESUB_DEFINE_ERROR(FormatError);

#undef LIESUB_DEFINE_ERROR

}  // namespace liesub
