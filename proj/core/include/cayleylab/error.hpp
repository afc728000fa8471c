#ifndef CAYLEYLAB_ERROR_HPP
#define CAYLEYLAB_ERROR_HPP

#include <stdexcept>
#include <string>

namespace cayleylab {

// Base of everything the library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or out-of-domain input (bad degree, non-transposition, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A hypothesis of an operation does not hold for the given input.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A size cap (graph degree, element count) would be exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// Two independent routes disagreed. Always a bug in this library.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace cayleylab

#endif  // CAYLEYLAB_ERROR_HPP
