#ifndef EPICONJ_ERRORS_HPP
#define EPICONJ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace epiconj {

/// Base class for every error raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ClosureCapExceeded : Error {
  using Error::Error;
};

struct NonAssociative : Error {
  using Error::Error;
};

struct NoIdentity : Error {
  using Error::Error;
};

struct NotGroupElement : Error {
  using Error::Error;
};

struct NotRegular : Error {
  using Error::Error;
};

struct NotInverse : Error {
  using Error::Error;
};

struct NotFactorizable : Error {
  using Error::Error;
};

struct SizeMismatch : Error {
  using Error::Error;
};

struct AmbientMismatch : Error {
  using Error::Error;
};

struct NotInjective : Error {
  using Error::Error;
};

struct GroupTooLarge : Error {
  using Error::Error;
};

struct BadAlphabet : Error {
  using Error::Error;
};

struct AlphabetMismatch : Error {
  using Error::Error;
};

struct NotLocallyInjective : Error {
  using Error::Error;
};

struct NotInjectiveAtLength : Error {
  using Error::Error;
};

struct LengthCapExceeded : Error {
  using Error::Error;
};

struct DepthCapExceeded : Error {
  using Error::Error;
};

}  // namespace epiconj

#endif  // EPICONJ_ERRORS_HPP
