#include "orbiquant/error.hpp"

namespace orbiquant {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::BadParameter: return "BadParameter";
    case ErrorCode::MirrorVariant: return "MirrorVariant";
    case ErrorCode::ClosedVariant: return "ClosedVariant";
    case ErrorCode::BaseMismatch: return "BaseMismatch";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::UnsupportedGroup: return "UnsupportedGroup";
    case ErrorCode::UnsupportedModel: return "UnsupportedModel";
    case ErrorCode::UnsupportedBase: return "UnsupportedBase";
    case ErrorCode::NotIntegral: return "NotIntegral";
    case ErrorCode::NoHalfForm: return "NoHalfForm";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::InvalidSector: return "InvalidSector";
    case ErrorCode::OrderMismatch: return "OrderMismatch";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::DomainMismatch: return "DomainMismatch";
    case ErrorCode::BadSamplePoints: return "BadSamplePoints";
    case ErrorCode::Overflow: return "Overflow";
  }
  return "Unknown";
}

}  // namespace orbiquant
