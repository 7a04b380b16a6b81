// SPDX-License-Identifier: MIT
#pragma once

#include <stdexcept>
#include <string>

namespace entcirc {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A qubit index is outside the state's range, or a pair collides.
struct IndexOutOfRange : Error {
    using Error::Error;
};

/// A matrix expected to be unitary fails ||U^dag U - I|| <= 1e-10.
struct NonUnitary : Error {
    using Error::Error;
};

/// A qubit subset that must be nonempty is empty.
struct EmptySubset : Error {
    using Error::Error;
};

/// A qubit subset that must be a proper subset covers every qubit.
struct FullSet : Error {
    using Error::Error;
};

/// A matrix expected to be Hermitian is not (within tolerance).
struct NotHermitian : Error {
    using Error::Error;
};

/// A disorder-averaged series never satisfies the flatness criterion.
struct NoSaturation : Error {
    using Error::Error;
};

/// The least-squares design is singular (e.g. all abscissae equal).
struct DegenerateFit : Error {
    using Error::Error;
};

/// A precondition on an argument value is violated (bad angle range,
/// invalid excitation count, qubit-count cap, malformed gate, ...).
struct InvalidArgument : Error {
    using Error::Error;
};

} // namespace entcirc
