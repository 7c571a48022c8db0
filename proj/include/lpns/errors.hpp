#pragma once

#include <stdexcept>
#include <string>

namespace lpns {

// Base for everything thrown by the library. The CLI maps these to exit code 3,
// config problems to exit code 2.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidFieldError : Error {
  using Error::Error;
};
struct AsymmetryError : Error {
  using Error::Error;
};
struct ShapeError : Error {
  using Error::Error;
};
struct IndexError : Error {
  using Error::Error;
};
struct BandError : Error {
  using Error::Error;
};
struct ExponentError : Error {
  using Error::Error;
};
struct SupportError : Error {
  using Error::Error;
};
struct TimeGridError : Error {
  using Error::Error;
};
struct CriticalityError : Error {
  using Error::Error;
};
struct ConsistencyError : Error {
  using Error::Error;
};
struct SmallnessError : Error {
  using Error::Error;
};
struct DivergenceError : Error {
  using Error::Error;
};
struct StepSizeError : Error {
  using Error::Error;
};
struct CorpusError : Error {
  using Error::Error;
};
struct EmptyError : Error {
  using Error::Error;
};
struct IoError : Error {
  using Error::Error;
};
struct ConfigError : Error {
  using Error::Error;
};

}  // namespace lpns
