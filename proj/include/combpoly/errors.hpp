#pragma once

#include <stdexcept>
#include <string>

namespace combpoly {

/// Base of every error raised by the library. Each subclass names one
/// failure mode; callers that do not care catch `Error`.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define COMBPOLY_DECLARE_ERROR(Name)          \
  class Name : public Error {                 \
   public:                                    \
    explicit Name(const std::string& what)    \
        : Error(std::string(#Name ": ") + what) {} \
  }

// exact ring
COMBPOLY_DECLARE_ERROR(NotDivisible);
COMBPOLY_DECLARE_ERROR(DivisionByZero);
COMBPOLY_DECLARE_ERROR(LetterSetMismatch);
COMBPOLY_DECLARE_ERROR(RangeError);
COMBPOLY_DECLARE_ERROR(PowerTooSmall);

// grammar
COMBPOLY_DECLARE_ERROR(DuplicateRule);
COMBPOLY_DECLARE_ERROR(UnknownLetter);
COMBPOLY_DECLARE_ERROR(NegativePowerAtZero);
COMBPOLY_DECLARE_ERROR(UnassignedLetter);
COMBPOLY_DECLARE_ERROR(NonPolynomialResult);
COMBPOLY_DECLARE_ERROR(PatternMismatch);

// hessenberg
COMBPOLY_DECLARE_ERROR(NotHessenberg);
COMBPOLY_DECLARE_ERROR(OrderTooLarge);

// enumerate
COMBPOLY_DECLARE_ERROR(TooLarge);
COMBPOLY_DECLARE_ERROR(UnsupportedStatForClass);
COMBPOLY_DECLARE_ERROR(InvalidStirlingWord);

// families
COMBPOLY_DECLARE_ERROR(UnsupportedOrder);
COMBPOLY_DECLARE_ERROR(UnsupportedMethod);
COMBPOLY_DECLARE_ERROR(ExactDivisionFailed);
COMBPOLY_DECLARE_ERROR(NonIntegerResult);

// verify / naming
COMBPOLY_DECLARE_ERROR(UnknownCheck);
COMBPOLY_DECLARE_ERROR(UnknownName);

#undef COMBPOLY_DECLARE_ERROR

/// Raised by the grammar-file parser. Line and column are 1-based.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, int line, int column)
      : Error("SyntaxError: line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace combpoly
