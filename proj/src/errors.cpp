#include "wittjet/errors.hpp"

namespace wittjet {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotPrimePower: return "NotPrimePower";
    case ErrorKind::WrongResidueSize: return "WrongResidueSize";
    case ErrorKind::QuotientNotField: return "QuotientNotField";
    case ErrorKind::PiNotDividingP: return "PiNotDividingP";
    case ErrorKind::NotDivisible: return "NotDivisible";
    case ErrorKind::SizeCap: return "SizeCap";
    case ErrorKind::FeasibilityCap: return "FeasibilityCap";
    case ErrorKind::IllDefined: return "IllDefined";
    case ErrorKind::RelationViolation: return "RelationViolation";
    case ErrorKind::NotCharP: return "NotCharP";
    case ErrorKind::NoStructureMap: return "NoStructureMap";
    case ErrorKind::MissingAssignment: return "MissingAssignment";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

}  // namespace wittjet
