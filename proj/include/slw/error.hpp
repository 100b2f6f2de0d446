#pragma once

#include <stdexcept>
#include <string>

namespace slw {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Vector lengths or grid shapes that do not line up.
class AlignmentError : public Error {
 public:
  using Error::Error;
};

/// A parameter outside its admissible range (p < 1, w <= 0, ...).
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// A precondition on an operator was not met, typically ||K|| >= 1.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

/// A property that holds by theorem failed at runtime, e.g. the objective
/// increased during the thresholded Landweber iteration.
class InvariantBreach : public Error {
 public:
  using Error::Error;
};

class InternalError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace slw
