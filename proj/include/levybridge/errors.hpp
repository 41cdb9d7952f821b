#pragma once

#include <stdexcept>
#include <string>

namespace levy {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Precondition violations (bad arguments, bad time ordering, ...).
struct InvalidArgument : Error {
    using Error::Error;
};

/// Iterative marginal fitting did not reach the requested tolerance.
struct NonConvergence : Error {
    using Error::Error;
};

/// A marginal density has a zero-mass region that makes a quotient undefined.
struct DegenerateMarginal : Error {
    using Error::Error;
};

/// Madelung decomposition requested on a region where |psi| vanishes.
struct NodalRegion : Error {
    using Error::Error;
};

/// Ratio-kernel evaluation too close to a denominator zero.
struct PoleProximity : Error {
    using Error::Error;
};

/// Pointwise evaluation of the unitary transition kernel at x = +-t.
struct SingularPoint : Error {
    using Error::Error;
};

/// Witness scan exhausted all candidate zeros without a certified violation.
struct WitnessNotFound : Error {
    using Error::Error;
};

}  // namespace levy
