#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wittjet {

enum class ErrorKind {
  NotPrimePower,
  WrongResidueSize,
  QuotientNotField,
  PiNotDividingP,
  NotDivisible,
  SizeCap,
  FeasibilityCap,
  IllDefined,
  RelationViolation,
  NotCharP,
  NoStructureMap,
  MissingAssignment,
  InvalidArgument,
  Parse,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace wittjet
