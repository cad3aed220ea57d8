#pragma once

#include <stdexcept>
#include <string>

namespace qbarrier {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input outside the documented domain (negative width, V0 = 0, ...).
class InvalidParameter : public Error {
 public:
  using Error::Error;
};

/// |eps^4 - Vq^2| is below the degeneracy tolerance: alpha_+ == alpha_-.
class DegenerateParameters : public Error {
 public:
  using Error::Error;
};

/// alpha_- vanishes (eps = 1 with Vc > 0); the exponential basis collapses.
class ZeroAlphaMinus : public Error {
 public:
  using Error::Error;
};

/// The G factor matrix is numerically singular (|1 - beta*gamma| too small).
class IllConditioned : public Error {
 public:
  using Error::Error;
};

/// A linear system could not be solved (zero or non-finite pivot).
class SingularSystem : public Error {
 public:
  using Error::Error;
};

}  // namespace qbarrier
