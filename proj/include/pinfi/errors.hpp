#pragma once

#include <stdexcept>
#include <string>

namespace pinfi {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidParameter : Error {
    InvalidParameter(std::string param, const std::string& reason)
        : Error(param + ": " + reason), name(std::move(param)) {}
    std::string name;
};

struct NonPositiveSize : Error {
    NonPositiveSize() : Error("trade size must be positive") {}
};

struct SizeExceedsReserve : Error {
    SizeExceedsReserve() : Error("trade size exceeds dissipative reserve") {}
};

// Price is on the wrong side of the break-even threshold; callers that want
// the integral convention may map this to T = 0.
struct NoArbitrage : Error {
    using Error::Error;
};

struct DomainError : Error {
    using Error::Error;
};

struct InfeasibleBand : Error {
    InfeasibleBand() : Error("reward band is empty: theta - delta must exceed beta + p*theta (C > 1)") {}
};

struct InsufficientDepth : Error {
    InsufficientDepth() : Error("pool depth below minimum: N >= 1 + beta/(p*theta) required") {}
};

struct NotTerminated : Error {
    NotTerminated() : Error("trajectory did not terminate at a rest or cessation point") {}
};

struct InvalidConfig : Error {
    using Error::Error;
};

struct InvalidGridSpec : Error {
    using Error::Error;
};

}  // namespace pinfi
