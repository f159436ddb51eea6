#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ferrer {

enum class ErrorCode {
  MalformedInput,
  NonUniformDepth,
  NotDecreasing,
  NonPositiveLeaf,
  NotDownwardClosed,
  DepthMismatch,
  SingletonDiagram,
  DepthOne,
  NotSquarefree,
  CertificateFailure,
  NotPLinearShape,
  TooManyGenerators,
  CountOutOfRange,
  NotClosedUnderDivision,
  SizeLimitExceeded,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library. `path()` is a JSON path ("$[1][0]")
/// into the offending input when the error comes from parsing, empty otherwise.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::string path = {});

  ErrorCode code() const noexcept { return code_; }
  const std::string& path() const noexcept { return path_; }

 private:
  ErrorCode code_;
  std::string path_;
};

}  // namespace ferrer
