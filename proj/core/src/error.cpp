#include "heightzeta/error.hpp"

namespace heightzeta {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::MissingOpenStratum: return "MissingOpenStratum";
    case ErrorKind::KappaTooSmall: return "KappaTooSmall";
    case ErrorKind::UnknownComponent: return "UnknownComponent";
    case ErrorKind::TotalMismatch: return "TotalMismatch";
    case ErrorKind::InvalidDescriptor: return "InvalidDescriptor";
    case ErrorKind::NotInInterior: return "NotInInterior";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::PrimeError: return "PrimeError";
    case ErrorKind::TrivialCharacter: return "TrivialCharacter";
    case ErrorKind::PoleError: return "PoleError";
    case ErrorKind::ToleranceNotMet: return "ToleranceNotMet";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::DivergentParameters: return "DivergentParameters";
    case ErrorKind::InsufficientData: return "InsufficientData";
    case ErrorKind::Overflow: return "Overflow";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

void fail(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

}  // namespace heightzeta
