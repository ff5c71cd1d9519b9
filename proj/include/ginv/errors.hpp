#pragma once

#include <stdexcept>
#include <string>

namespace ginv {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// Raised when two tower elements live over radicand lists that cannot be
/// combined (unaligned operands, or a merged basis with more than 3 radicals).
class AlignmentError : public Error {
 public:
  using Error::Error;
};

/// An exact division left a nonzero remainder; the remainder is the witness.
class InexactDivision : public Error {
 public:
  InexactDivision(const std::string& what, std::string remainder)
      : Error(what), remainder_(std::move(remainder)) {}
  const std::string& remainder() const noexcept { return remainder_; }

 private:
  std::string remainder_;
};

/// A result violated a structural invariant (nonzero radical coordinate,
/// odd Taylor coefficient, ...). Always indicates an arithmetic bug.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace ginv
