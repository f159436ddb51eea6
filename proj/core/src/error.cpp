#include "ferrer/error.hpp"

namespace ferrer {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::MalformedInput: return "MalformedInput";
    case ErrorCode::NonUniformDepth: return "NonUniformDepth";
    case ErrorCode::NotDecreasing: return "NotDecreasing";
    case ErrorCode::NonPositiveLeaf: return "NonPositiveLeaf";
    case ErrorCode::NotDownwardClosed: return "NotDownwardClosed";
    case ErrorCode::DepthMismatch: return "DepthMismatch";
    case ErrorCode::SingletonDiagram: return "SingletonDiagram";
    case ErrorCode::DepthOne: return "DepthOne";
    case ErrorCode::NotSquarefree: return "NotSquarefree";
    case ErrorCode::CertificateFailure: return "CertificateFailure";
    case ErrorCode::NotPLinearShape: return "NotPLinearShape";
    case ErrorCode::TooManyGenerators: return "TooManyGenerators";
    case ErrorCode::CountOutOfRange: return "CountOutOfRange";
    case ErrorCode::NotClosedUnderDivision: return "NotClosedUnderDivision";
    case ErrorCode::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message, std::string path)
    : std::runtime_error(std::string(to_string(code)) + ": " + message +
                         (path.empty() ? std::string() : " at " + path)),
      code_(code),
      path_(std::move(path)) {}

}  // namespace ferrer
