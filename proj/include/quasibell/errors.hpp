#pragma once

#include <stdexcept>
#include <string>

namespace quasibell {

/// Input outside the mathematical domain of an operation (invalid overlap,
/// index out of range, negative amplitude, ...).
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// A superposition cancelled to (numerically) zero norm.
class ZeroNormState : public DomainError {
 public:
  explicit ZeroNormState(const std::string& what) : DomainError(what) {}
};

/// Requested quasi-Bell state does not exist for these parameters
/// (e.g. the antisymmetric states at alpha = 0, where kappa = 1).
class DegenerateState : public DomainError {
 public:
  explicit DegenerateState(const std::string& what) : DomainError(what) {}
};

/// The Fock-space truncation is too small to represent the requested object.
class TruncationError : public std::runtime_error {
 public:
  explicit TruncationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace quasibell
