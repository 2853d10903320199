#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace topoidx {

enum class ErrorCode {
  DivisionByZero,
  UnsupportedEvaluation,
  ParseError,
  SelfLoop,
  VertexOutOfRange,
  InvalidFamilyParams,
  DisconnectedGraph,
  GraphTooLarge,
  TemperatureUndefined,
  BanhattiUndefined,
  InverseUndefined,
  UnknownIndexName,
  ParamsOutOfStatedRange,
  UnknownOracle,
  IoError,
};

std::string_view error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace topoidx
