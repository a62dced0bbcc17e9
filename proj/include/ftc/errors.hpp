#pragma once

#include <stdexcept>
#include <string>

namespace ftc {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegenerateCurve : Error { using Error::Error; };
struct BadParams : Error { using Error::Error; };
struct OutOfRange : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct AmbiguousSign : Error { using Error::Error; };
struct CuspError : Error { using Error::Error; };
struct BadDims : Error { using Error::Error; };
struct DegenerateDirection : Error { using Error::Error; };
struct NotInUnitBall : Error { using Error::Error; };
struct PreconditionFailed : Error { using Error::Error; };
struct InfiniteDistortion : Error { using Error::Error; };
struct SearchFailed : Error { using Error::Error; };
struct CuspEncountered : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

} // namespace ftc
