#include "dgm/error.hpp"

namespace dgm {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::ZeroDenominator: return "ZeroDenominator";
    case Errc::DenominatorDivisibleByP: return "DenominatorDivisibleByP";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::NonPrimeModulus: return "NonPrimeModulus";
    case Errc::ZeroVectorHasNoDegree: return "ZeroVectorHasNoDegree";
    case Errc::ModuleMismatch: return "ModuleMismatch";
    case Errc::UnknownBasisName: return "UnknownBasisName";
    case Errc::ZeroCoefficient: return "ZeroCoefficient";
    case Errc::CompositionMismatch: return "CompositionMismatch";
    case Errc::DegreeMismatch: return "DegreeMismatch";
    case Errc::NotEndomorphism: return "NotEndomorphism";
    case Errc::BadDegree: return "BadDegree";
    case Errc::MalformedCochain: return "MalformedCochain";
    case Errc::NotADifferential: return "NotADifferential";
    case Errc::NotACocycle: return "NotACocycle";
    case Errc::RelationsViolated: return "RelationsViolated";
    case Errc::InfinitesimalNotCocycle: return "InfinitesimalNotCocycle";
    case Errc::TruncationMismatch: return "TruncationMismatch";
    case Errc::ConstantTermNotIdentity: return "ConstantTermNotIdentity";
    case Errc::NotSquareZero: return "NotSquareZero";
    case Errc::BadTruncation: return "BadTruncation";
    case Errc::TruncationTooSmall: return "TruncationTooSmall";
    case Errc::InvalidFamily: return "InvalidFamily";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::DuplicateName: return "DuplicateName";
    case Errc::UnknownName: return "UnknownName";
    case Errc::MissingDifferential: return "MissingDifferential";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(what), code_(code) {}

ParseError::ParseError(Errc code, int line, int column, const std::string& what)
    : Error(code, std::to_string(line) + ":" + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

}  // namespace dgm
