#pragma once

#include <stdexcept>
#include <string>

namespace hypstab {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define HYPSTAB_ERROR(name)                  \
  struct name : Error {                      \
    explicit name(const std::string& what)   \
        : Error(std::string(#name ": ") + what) {} \
  }

HYPSTAB_ERROR(InvalidPartition);
HYPSTAB_ERROR(PlethysmDomain);
HYPSTAB_ERROR(SizeMismatch);
HYPSTAB_ERROR(MissingPowerSum);
HYPSTAB_ERROR(ShapeTooWide);
HYPSTAB_ERROR(ShapeTooLong);
HYPSTAB_ERROR(ConstantModulus);
HYPSTAB_ERROR(NotSquarefree);
HYPSTAB_ERROR(WindowTooSmall);
HYPSTAB_ERROR(NegativeCoefficient);
HYPSTAB_ERROR(InsufficientData);
HYPSTAB_ERROR(InvalidField);
HYPSTAB_ERROR(ParseError);
// raised when an internal consistency check fails (never expected)
HYPSTAB_ERROR(InternalError);

#undef HYPSTAB_ERROR

}  // namespace hypstab
