#pragma once

#include <stdexcept>
#include <string>

namespace pqg {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DomainError : Error {
    using Error::Error;
};
struct UnsupportedDimension : Error {
    using Error::Error;
};
struct NonConvergent : Error {
    using Error::Error;
};
struct NonFiniteEvaluation : Error {
    using Error::Error;
};
struct GridResolutionError : Error {
    using Error::Error;
};
struct NonCommensurateShift : Error {
    using Error::Error;
};
struct StabilityError : Error {
    using Error::Error;
};
struct InsufficientData : Error {
    using Error::Error;
};
struct InsufficientGrid : Error {
    using Error::Error;
};
struct RelativisticRegime : Error {
    using Error::Error;
};
struct MissingInitialSpread : Error {
    using Error::Error;
};
struct IoError : Error {
    using Error::Error;
};

}  // namespace pqg
