#pragma once

#include <stdexcept>
#include <string>

namespace wsym {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define WSYM_ERROR(Name)                                 \
  struct Name : Error {                                  \
    explicit Name(const std::string& what = #Name)       \
        : Error(std::string(#Name) + ": " + what) {}     \
  }

WSYM_ERROR(NonSymmetric);
WSYM_ERROR(Singular);
WSYM_ERROR(IrreducibleDegreeTooHigh);
WSYM_ERROR(NotClosed);
WSYM_ERROR(NotIndependent);
WSYM_ERROR(BadParams);
WSYM_ERROR(NotCompact);
WSYM_ERROR(NotInvolutive);
WSYM_ERROR(NotAutomorphism);
WSYM_ERROR(DimensionCap);
WSYM_ERROR(BadSpinorChoice);
WSYM_ERROR(UnknownMember);
WSYM_ERROR(ParamsOutOfRange);
WSYM_ERROR(NotConstructible);
WSYM_ERROR(DegenerateOnSubalgebra);
WSYM_ERROR(NotNested);
WSYM_ERROR(SchemaError);

#undef WSYM_ERROR

} // namespace wsym
