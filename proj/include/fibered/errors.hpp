#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fibered {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class ZeroFunctional : public Error {
 public:
  ZeroFunctional() : Error("weight functional is zero") {}
};

class ZeroPolynomial : public Error {
 public:
  explicit ZeroPolynomial(const std::string& where) : Error(where + ": zero polynomial") {}
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class BoundExceeded : public Error {
 public:
  using Error::Error;
};

class ZeroMinor : public Error {
 public:
  ZeroMinor() : Error("selected minor is zero") {}
};

class NoDeletableGenerator : public Error {
 public:
  NoDeletableGenerator() : Error("u vanishes on every generator") {}
};

class FunctionalMismatch : public Error {
 public:
  FunctionalMismatch() : Error("series use different weight functionals") {}
};

class NotAUnit : public Error {
 public:
  NotAUnit() : Error("u-minimal part is not a signed monomial") {}
};

class NotUnipotentForm : public Error {
 public:
  NotUnipotentForm() : Error("matrix is not of the form I + A with supp(A) in {u > 0}") {}
};

class NotDivisibleAtStep : public Error {
 public:
  NotDivisibleAtStep(std::size_t step, std::string remainder_minimal_part)
      : Error("division fails at step " + std::to_string(step) + ": minimal part " +
              remainder_minimal_part + " is not divisible"),
        step_(step),
        minimal_part_(std::move(remainder_minimal_part)) {}

  std::size_t step() const noexcept { return step_; }
  const std::string& minimal_part() const noexcept { return minimal_part_; }

 private:
  std::size_t step_;
  std::string minimal_part_;
};

/// Raised when a cutoff can never be reached by the geometric or division
/// iteration (lexicographic levels with infinite sublevel sets).
class NotTerminating : public Error {
 public:
  using Error::Error;
};

class ZeroDenominator : public Error {
 public:
  ZeroDenominator() : Error("Phi_n divides the denominator") {}
};

class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace fibered
