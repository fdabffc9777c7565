#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cy3 {

enum class ErrorKind {
  InvertNonUnit,
  PrecisionExhausted,
  ExpDomain,
  LogDomain,
  SubstituteDomain,
  RevertSingular,
  NotUnipotent,
  NotIntegrable,
  SingularModPM,
  RiemannViolation,
  KodairaSpencerSingular,
  NotIntegral,
  MatcanfrobMismatch,
  NotUnit,
  NotMUM,
  NormalizationMismatch,
  ShapeMismatch,
  InvalidArgument,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries a kind so callers (the CLI in
// particular) can map it to an exit code without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void raise(ErrorKind kind, const std::string& what);

}  // namespace cy3
