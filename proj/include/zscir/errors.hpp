#pragma once

#include <stdexcept>
#include <string>

namespace zscir {

// Exceptions are deliberately fine-grained: the CLI maps them to exit codes
// and tests assert on the concrete type.

struct ShapeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ContractError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct LookupError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct TaggingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DegenerateContextError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DegenerateParameterError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DegenerateQueryError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DeterminismError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DivergenceError : std::runtime_error {
  DivergenceError(const std::string& what, std::size_t step)
      : std::runtime_error(what), step(step) {}
  std::size_t step;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FormatVersionError : IoError {
  using IoError::IoError;
};

struct DigestError : IoError {
  using IoError::IoError;
};

}  // namespace zscir
