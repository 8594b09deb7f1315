#pragma once

#include <stdexcept>
#include <string>

namespace dynlo {

/// Raised when an operation is called outside its precondition
/// (length mismatch, index out of range, k > n, ...).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Raised for invalid experiment configurations. `key()` names the
/// offending setting so the CLI can report it.
class ConfigError : public std::invalid_argument {
 public:
  ConfigError(std::string key, const std::string& message)
      : std::invalid_argument(message), key_(std::move(key)) {}

  const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

}  // namespace dynlo
