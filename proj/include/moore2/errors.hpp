#pragma once

#include <stdexcept>
#include <string>

namespace moore2 {

// Bad arguments or unsupported parameters. The CLI maps these to exit code 2.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A certified computation produced an inconsistent result. Always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class NotPrimeError : public InputError {
 public:
  using InputError::InputError;
};

class DegreeOutOfRangeError : public InputError {
 public:
  using InputError::InputError;
};

class FieldMismatchError : public InputError {
 public:
  using InputError::InputError;
};

class DivisionByZeroError : public InputError {
 public:
  using InputError::InputError;
};

class WrongCharacteristicError : public InputError {
 public:
  using InputError::InputError;
};

class NoSpecialCubicError : public InputError {
 public:
  using InputError::InputError;
};

class TowerMismatchError : public InputError {
 public:
  using InputError::InputError;
};

class ZeroElementError : public InputError {
 public:
  using InputError::InputError;
};

class IndexOutOfRangeError : public InputError {
 public:
  using InputError::InputError;
};

class NotCoprimeError : public InputError {
 public:
  using InputError::InputError;
};

class ModulusMismatchError : public InputError {
 public:
  using InputError::InputError;
};

class NotPrimePowerError : public InputError {
 public:
  using InputError::InputError;
};

class NotOddPrimeError : public InputError {
 public:
  using InputError::InputError;
};

class OddQError : public InputError {
 public:
  using InputError::InputError;
};

class ZeroAlphaError : public InputError {
 public:
  using InputError::InputError;
};

class InvalidPdsError : public InputError {
 public:
  using InputError::InputError;
};

// The basis-change matrix failed its defining identity.
class DegenerateBasisError : public InternalError {
 public:
  using InternalError::InternalError;
};

// A constructed certificate failed its own verification.
class VerificationFailedError : public InternalError {
 public:
  using InternalError::InternalError;
};

// Isomorphism search ran out of backtracking nodes before deciding.
class BudgetExceededError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace moore2
