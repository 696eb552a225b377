#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace linext {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-range argument.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Work would exceed a configured size or enumeration cap.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Cayley table is not a Latin square.
class StructureError : public InputError {
 public:
  using InputError::InputError;
};

/// Row or column 0 of a Cayley table is not the identity permutation.
class IdentityPositionError : public InputError {
 public:
  using InputError::InputError;
};

/// A question that only makes sense under a hypothesis the input lacks,
/// e.g. asking a LIP condition of a loop that has no LIP.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A Γ-orbit collapsed because the loop has an element x != e with x*x = x^-1.
class Order3Error : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// A feature (e.g. element order) queried on a loop where it is undefined.
class UndefinedFeatureError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Operation applied outside its mathematical domain (e.g. quotient by a
/// non-normal subloop).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// P(a, e) or Q(e, b) is not the identity automorphism.
class CocycleNormalizationError : public InputError {
 public:
  using InputError::InputError;
};

/// An internal invariant failed. Reaching this is a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

class ParseError : public InputError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace linext
