#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "nefkit/rational.hpp"

namespace nefkit {

/// Malformed or mutually inconsistent input: shape mismatches,
/// unparseable documents, unknown schema keys, mixed ambient spaces.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An operation was invoked outside its stated domain (wrong bundle
/// kind, uncatalogued blow-up site, non-ample necessary check, ...).
struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Constructed data violates a structural invariant, e.g. a bundle
/// declared semistable with vanishing discriminant whose discriminant
/// is not zero.
struct InvariantError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A pointed-cone operation met a lineality direction. The witness
/// spans a line contained in the cone.
struct NotPointedError : std::runtime_error {
  NotPointedError(const std::string& msg, RatVec witness_)
      : std::runtime_error(msg), witness(std::move(witness_)) {}
  RatVec witness;
};

/// The sup-lambda optimization had no row bounding lambda from above.
struct UnboundedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace nefkit
