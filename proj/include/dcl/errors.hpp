#pragma once

#include <stdexcept>
#include <string>

namespace dcl {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotRanked : Error { using Error::Error; };
struct Unreachable : Error { using Error::Error; };
struct StructureViolation : Error { using Error::Error; };
struct NotDistributive : Error { using Error::Error; };
struct CapExceeded : Error { using Error::Error; };
struct UnrankedComponent : Error { using Error::Error; };
struct InexactDivision : Error { using Error::Error; };
struct InconsistentLattice : Error { using Error::Error; };
struct SizeCap : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct InvalidObject : Error { using Error::Error; };

}  // namespace dcl
