#ifndef MODGB_ERRORS_HPP
#define MODGB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace modgb {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on user-supplied data was violated.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Operands live in different free modules (or otherwise do not fit together).
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// The submodule is the whole free module; the degree theory needs M != F.
class ImproperSubmodule : public Error {
 public:
  ImproperSubmodule()
      : Error("the submodule equals the whole free module (M = F); a proper submodule is required") {}
};

/// A size or exponent guard tripped.
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

/// A randomized search ran out of attempts.
class SearchExhausted : public Error {
 public:
  using Error::Error;
};

}  // namespace modgb

#endif  // MODGB_ERRORS_HPP
