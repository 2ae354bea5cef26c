#pragma once

#include <stdexcept>
#include <string>

namespace betti {

/// Input rejected by a domain rule (inadmissible Hilbert function, non-stable
/// ideal, inapplicable cancellation, ...). `reason()` is a short stable token.
class DomainError : public std::runtime_error {
 public:
  DomainError(std::string reason, const std::string& message)
      : std::runtime_error(message), reason_(std::move(reason)) {}

  const std::string& reason() const noexcept { return reason_; }

 private:
  std::string reason_;
};

/// Exhaustive search refused because the table exceeds the configured size.
class SizeGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal cross-check failed; always a bug, never bad input.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace betti
