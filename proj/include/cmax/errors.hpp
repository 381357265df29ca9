#pragma once

#include <stdexcept>

namespace cmax {

/// Base class for every domain/validation failure thrown by this library.
/// Messages start with the error name so command-line consumers can report
/// the failure class without RTTI games.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Context construction
struct NonPositiveConstant : Error { using Error::Error; };
struct MaxSpeedNotAboveLightSpeed : Error { using Error::Error; };

// Speed-domain violations
struct SpeedExceedsMaximum : Error { using Error::Error; };
struct SpeedBelowLight : Error { using Error::Error; };

// Frame transformations
struct BoostAtMaximumSpeed : Error { using Error::Error; };
struct CompositionSingularity : Error { using Error::Error; };
struct ImaginaryProperTime : Error { using Error::Error; };

// Dynamics integration
struct NonPositiveStep : Error { using Error::Error; };
struct ForceLawNonFinite : Error { using Error::Error; };
struct TooFewSamples : Error { using Error::Error; };

// Wave solvers
struct CflViolation : Error { using Error::Error; };
struct StabilityViolation : Error { using Error::Error; };
struct NonFiniteField : Error { using Error::Error; };

/// Catch-all for malformed plumbing input (negative mass, bad grid size, ...).
struct InvalidArgument : Error { using Error::Error; };

} // namespace cmax
