#pragma once

#include <stdexcept>
#include <string>

namespace symprime {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside an operation's stated domain (bad range, n too small, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Two residues from different rings were combined.
class ModulusMismatchError : public Error {
 public:
  using Error::Error;
};

// gcd(value, modulus) != 1; the requested inverse does not exist.
class NotInvertibleError : public Error {
 public:
  using Error::Error;
};

// A prime-only checker was handed a composite subject.
class NonPrimeError : public Error {
 public:
  using Error::Error;
};

// An exact identity that must hold by construction failed; implementation bug.
class IdentityViolationError : public Error {
 public:
  using Error::Error;
};

// Checkpoint file is unreadable, malformed, or inconsistent with the request.
class CheckpointError : public Error {
 public:
  using Error::Error;
};

}  // namespace symprime
