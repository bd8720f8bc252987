#pragma once

#include <stdexcept>
#include <string>

namespace elabc {

struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

struct LengthError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NonFiniteInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct InitializationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SingularDesign : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EmptyChain : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace elabc
