#pragma once

#include <stdexcept>
#include <string>

namespace msym {

/// Base class of every error raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A rational closed form that should have cancelled to an integer did not.
struct IntegralityViolation : Error {
    using Error::Error;
};

/// Argument lies outside the range on which a formula is claimed.
struct RangeError : Error {
    using Error::Error;
};

/// Point outside the domain of a map (e.g. not in the 2-simplex).
struct DomainError : Error {
    using Error::Error;
};

/// Triple does not lie in the fiber the caller claimed.
struct FiberError : Error {
    using Error::Error;
};

/// Chain complex violates a structural invariant.
struct InvalidComplex : Error {
    using Error::Error;
};

/// Gluing map is not a chain isomorphism of the labeled subcomplexes.
struct InterfaceMismatch : Error {
    using Error::Error;
};

/// Malformed CW complex file.
struct ParseError : Error {
    using Error::Error;
};

/// Real-side Betti sum exceeded the complex side; only a broken model can do this.
struct SmithViolation : Error {
    using Error::Error;
};

}  // namespace msym
