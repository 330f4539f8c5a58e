#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace tiltlab {

// Caller broke a precondition (shape mismatch, wrong quiver, bad index).
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A computed object violated an invariant that the theory guarantees.
class InternalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// User-facing input rejection with a machine-readable code and witness.
class InputError : public std::runtime_error {
 public:
  InputError(std::string code, std::string message, std::vector<int> witness = {})
      : std::runtime_error(message), code_(std::move(code)), witness_(std::move(witness)) {}

  const std::string& code() const noexcept { return code_; }
  const std::vector<int>& witness() const noexcept { return witness_; }

 private:
  std::string code_;
  std::vector<int> witness_;
};

}  // namespace tiltlab
