#pragma once

#include <stdexcept>
#include <string>

namespace actual_cause {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Integer overflow in rational arithmetic or a zero denominator.
class ArithmeticError : public Error {
public:
  using Error::Error;
};

/// A value outside the declared range of a variable. For formulas this is
/// the "not defined" case and is never folded into `false`.
class RangeError : public Error {
public:
  using Error::Error;
};

class UnknownVariableError : public Error {
public:
  using Error::Error;
};

/// Interventions may only target endogenous variables.
class ExogenousTargetError : public Error {
public:
  using Error::Error;
};

/// Operation requires a model whose validation produced no diagnostics.
class InvalidModelError : public Error {
public:
  using Error::Error;
};

class UnknownModelError : public Error {
public:
  using Error::Error;
};

/// An exhaustive search was refused because the model exceeds the
/// configured variable bound.
class ResourceGuardError : public Error {
public:
  using Error::Error;
};

}  // namespace actual_cause
