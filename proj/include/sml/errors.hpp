#pragma once

#include <stdexcept>
#include <string>

namespace sml {

/// Base class for every error raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input: bad rational string, bad JSON field, invalid table, ...
/// The message names the offending field or value.
struct ParseError : Error {
    using Error::Error;
};

/// Two objects live on different ground sets.
struct GroundMismatch : Error {
    using Error::Error;
};

/// An exhaustive operation was requested above its configured size limit.
struct SizeGuard : Error {
    using Error::Error;
};

/// A Mazur-chain evaluation ran past its level cap. Distinct from a true
/// infinite value: the caller must raise the cap to certify either way.
struct LevelCapExceeded : Error {
    using Error::Error;
};

struct EmptyGround : Error {
    using Error::Error;
};

struct EmptyRestriction : Error {
    using Error::Error;
};

/// An operation requiring integer values met a non-integer one.
struct NonIntegerValue : Error {
    using Error::Error;
};

/// A partial table has no entry for the queried set.
struct MissingTableEntry : Error {
    using Error::Error;
};

/// A covering family does not cover its ground.
struct CoverageGap : Error {
    using Error::Error;
};

struct NotProbability : Error {
    using Error::Error;
};

/// A theorem-shaped check was invoked on inputs violating its hypotheses.
struct HypothesisFailure : Error {
    using Error::Error;
};

/// The dominated-measure LP is unbounded, i.e. some singleton has value
/// infinity under the submeasure.
struct InfiniteSingleton : Error {
    using Error::Error;
};

struct SignedInput : Error {
    using Error::Error;
};

struct EntryAboveOne : Error {
    using Error::Error;
};

struct NotBarrierSet : Error {
    using Error::Error;
};

struct NotHomogeneous : Error {
    using Error::Error;
};

struct BlockTooSmall : Error {
    using Error::Error;
};

/// An operation requires a specific submeasure representation.
struct ReprMismatch : Error {
    using Error::Error;
};

} // namespace sml
