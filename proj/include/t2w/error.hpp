#pragma once

#include <stdexcept>
#include <string>

namespace t2w {

enum class ErrorCode {
  kNotCoprime,
  kIllegalDeterminant,
  kIllegalWeightSystem,
  kNotUnimodular,
  kIsotropyMismatch,
  kOrientationMismatch,
  kIllegalJunction,
  kNoSolutionInBound,
  kIllegalParameters,
  kOverflow,
  kParse,
  kInvalidArgument,
  kInternal,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace t2w
