#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace heightzeta {

enum class ErrorKind {
  // geometry descriptor validation
  MissingOpenStratum,
  KappaTooSmall,
  UnknownComponent,
  TotalMismatch,
  InvalidDescriptor,
  NotInInterior,
  // numerics
  DomainError,
  PrimeError,
  TrivialCharacter,
  PoleError,
  ToleranceNotMet,
  HypothesisViolated,
  DivergentParameters,
  InsufficientData,
  Overflow,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every library failure is reported through this type; the kind is stable
// and serialized verbatim by the CLI.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

}  // namespace heightzeta
