#pragma once

#include <stdexcept>
#include <string>

namespace quiverkit {

enum class ErrorKind {
  invalid_argument,  // malformed quiver/morphism data, unknown ids
  precondition,      // e.g. a non-monic map passed where a mono is required
  mismatch,          // domain/codomain disagreement
  parse,             // document syntax
  budget_exhausted,  // homomorphism search ran out of budget
  size_limit,        // enumeration guard exceeded
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace quiverkit
