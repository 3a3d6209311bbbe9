#pragma once

#include <stdexcept>
#include <string>

namespace linorb {

/// Base class for every error raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Two series with different caps fed to a binary operation.
struct CapMismatch : Error {
    using Error::Error;
};

/// A line whose three coefficients are all zero.
struct InvalidLine : Error {
    using Error::Error;
};

/// Two proportional coordinate lines; repeated lines go in the multiplicity field.
struct DuplicateLine : Error {
    using Error::Error;
};

/// A component multiplicity below 1.
struct InvalidMultiplicity : Error {
    using Error::Error;
};

/// Abstract incidence data in which two distinct lines would meet twice.
struct InconsistentIncidence : Error {
    using Error::Error;
};

/// Stabilizer enumeration requested for a point set whose stabilizer is not finite.
struct InfiniteStabilizer : Error {
    using Error::Error;
};

/// The plane stabilizer search found no quadruple in general position.
struct NotApplicable : Error {
    using Error::Error;
};

/// Operation needs exact coordinates but the configuration is abstract.
struct NeedsCoordinates : Error {
    using Error::Error;
};

/// An internal invariant failed (e.g. a predegree not divisible by the component count).
struct InternalInconsistency : Error {
    using Error::Error;
};

}  // namespace linorb
