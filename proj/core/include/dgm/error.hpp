#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dgm {

enum class Errc {
  ZeroDenominator,
  DenominatorDivisibleByP,
  FieldMismatch,
  DivisionByZero,
  NonPrimeModulus,
  ZeroVectorHasNoDegree,
  ModuleMismatch,
  UnknownBasisName,
  ZeroCoefficient,
  CompositionMismatch,
  DegreeMismatch,
  NotEndomorphism,
  BadDegree,
  MalformedCochain,
  NotADifferential,
  NotACocycle,
  RelationsViolated,
  InfinitesimalNotCocycle,
  TruncationMismatch,
  ConstantTermNotIdentity,
  NotSquareZero,
  BadTruncation,
  TruncationTooSmall,
  InvalidFamily,
  SyntaxError,
  DuplicateName,
  UnknownName,
  MissingDifferential,
  InvalidArgument,
};

std::string_view errc_name(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Errors from the `.dgm` reader; positions are 1-based.
class ParseError : public Error {
 public:
  ParseError(Errc code, int line, int column, const std::string& what);

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace dgm
