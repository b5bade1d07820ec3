#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace legendrian {

enum class ErrorKind {
  SingularMatrix,
  NotSymmetric,
  OutOfRange,
  AsymmetricLinking,
  InvalidDiagram,
  InvalidGroup,
  NonIntegerResult,
  NotHomologySphere,
  UnsupportedForm,
  UnsupportedSlope,
  InfiniteSlope,
  UnsupportedInput,
  InvalidParams,
  ParseError,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::AsymmetricLinking: return "AsymmetricLinking";
    case ErrorKind::InvalidDiagram: return "InvalidDiagram";
    case ErrorKind::InvalidGroup: return "InvalidGroup";
    case ErrorKind::NonIntegerResult: return "NonIntegerResult";
    case ErrorKind::NotHomologySphere: return "NotHomologySphere";
    case ErrorKind::UnsupportedForm: return "UnsupportedForm";
    case ErrorKind::UnsupportedSlope: return "UnsupportedSlope";
    case ErrorKind::InfiniteSlope: return "InfiniteSlope";
    case ErrorKind::UnsupportedInput: return "UnsupportedInput";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Input/validation problems as opposed to failed mathematical preconditions.
constexpr bool is_input_error(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::AsymmetricLinking:
    case ErrorKind::InvalidDiagram:
    case ErrorKind::InvalidGroup:
    case ErrorKind::InvalidParams:
    case ErrorKind::ParseError:
      return true;
    default:
      return false;
  }
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace legendrian
