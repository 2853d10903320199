#include "topoidx/error.hpp"

namespace topoidx {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::UnsupportedEvaluation: return "UnsupportedEvaluation";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::InvalidFamilyParams: return "InvalidFamilyParams";
    case ErrorCode::DisconnectedGraph: return "DisconnectedGraph";
    case ErrorCode::GraphTooLarge: return "GraphTooLarge";
    case ErrorCode::TemperatureUndefined: return "TemperatureUndefined";
    case ErrorCode::BanhattiUndefined: return "BanhattiUndefined";
    case ErrorCode::InverseUndefined: return "InverseUndefined";
    case ErrorCode::UnknownIndexName: return "UnknownIndexName";
    case ErrorCode::ParamsOutOfStatedRange: return "ParamsOutOfStatedRange";
    case ErrorCode::UnknownOracle: return "UnknownOracle";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace topoidx
