#include "cy3/error.hpp"

namespace cy3 {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvertNonUnit: return "InvertNonUnit";
    case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorKind::ExpDomain: return "ExpDomain";
    case ErrorKind::LogDomain: return "LogDomain";
    case ErrorKind::SubstituteDomain: return "SubstituteDomain";
    case ErrorKind::RevertSingular: return "RevertSingular";
    case ErrorKind::NotUnipotent: return "NotUnipotent";
    case ErrorKind::NotIntegrable: return "NotIntegrable";
    case ErrorKind::SingularModPM: return "SingularModPM";
    case ErrorKind::RiemannViolation: return "RiemannViolation";
    case ErrorKind::KodairaSpencerSingular: return "KodairaSpencerSingular";
    case ErrorKind::NotIntegral: return "NotIntegral";
    case ErrorKind::MatcanfrobMismatch: return "MatcanfrobMismatch";
    case ErrorKind::NotUnit: return "NotUnit";
    case ErrorKind::NotMUM: return "NotMUM";
    case ErrorKind::NormalizationMismatch: return "NormalizationMismatch";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

void raise(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace cy3
