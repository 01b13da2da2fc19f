#pragma once

#include <stdexcept>
#include <string>

namespace nearring {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input tables are ragged, non-square, or contain out-of-range entries.
struct MalformedTableError : Error {
  using Error::Error;
};

// A nearring file failed to parse; message carries line/field context.
struct ParseError : Error {
  using Error::Error;
};

// Requested structure exceeds the configured order cap.
struct OrderCapError : Error {
  using Error::Error;
};

// A table passed as a group is not a group.
struct NotAGroupError : Error {
  using Error::Error;
};

// P passed to a P-regularity check is not a two-sided ideal.
struct NotAnIdealError : Error {
  using Error::Error;
};

// Strict mode requires a unity element and the nearring has none.
struct NoUnityError : Error {
  using Error::Error;
};

// A family member passed to an intersection check is not a bi-ideal.
struct NotABiIdealError : Error {
  using Error::Error;
};

// A decomposition was requested with an empty block family.
struct EmptyFamilyError : Error {
  using Error::Error;
};

// An operation's stated hypothesis does not hold for the given arguments.
struct HypothesisError : Error {
  using Error::Error;
};

// Sanity trip-wire: an internally derived element left P during a fold.
// Must never fire on valid inputs.
struct InternalCheckError : Error {
  using Error::Error;
};

}  // namespace nearring
