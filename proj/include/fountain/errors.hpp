#pragma once

#include <stdexcept>
#include <string>

namespace fountain {

// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
public:
  using Error::Error;
};

// Matrix has rank < k and cannot be inverted.
class SingularError : public Error {
public:
  using Error::Error;
};

class DomainError : public Error {
public:
  using Error::Error;
};

// A row position exhausted its sampling budget while building a full-rank matrix.
class GenerationError : public Error {
public:
  using Error::Error;
};

class OrderCapError : public Error {
public:
  using Error::Error;
};

// Requested permutation would exceed the materialization cap.
class CapError : public Error {
public:
  using Error::Error;
};

class VerifyError : public Error {
public:
  using Error::Error;
};

class GroupAxiomError : public Error {
public:
  GroupAxiomError(std::string axiom, const std::string& witness)
      : Error("group axiom violated: " + axiom + " (witness: " + witness + ")"),
        axiom_(std::move(axiom)) {}

  const std::string& axiom() const noexcept { return axiom_; }

private:
  std::string axiom_;
};

// Malformed matrix/vector text.
class ParseError : public Error {
public:
  using Error::Error;
};

}  // namespace fountain
