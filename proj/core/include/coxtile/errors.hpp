#pragma once

#include <stdexcept>
#include <string>

namespace coxtile {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Construction-time failures.
struct UnsupportedType : Error { using Error::Error; };
struct UnsupportedHost : Error { using Error::Error; };
struct RelationMismatch : Error { using Error::Error; };
struct MatrixMismatch : Error { using Error::Error; };
struct GroupTooLarge : Error { using Error::Error; };
struct InvalidAngles : Error { using Error::Error; };

// Input/domain failures.
struct ParseError : Error { using Error::Error; };
struct NotReduced : Error { using Error::Error; };
struct NotReducedInX : Error { using Error::Error; };
struct NotReducedInW : Error { using Error::Error; };
struct NotInSubgroup : Error { using Error::Error; };
struct ExplosionGuard : Error { using Error::Error; };

// Tiling/rendering failures.
struct MegatileViolation : Error { using Error::Error; };
struct AsymmetricBasis : Error { using Error::Error; };
struct BasisMismatch : Error { using Error::Error; };

}  // namespace coxtile
