#ifndef CSPATH_ERROR_H_
#define CSPATH_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace cspath {

enum class ErrorCode {
  kDuplicateEdge,
  kSelfLoop,
  kNonPositiveValue,
  kVertexOutOfRange,
  kInvalidInstance,
  kInstanceTooLarge,
  kSearchSpaceTooLarge,
  kNotReached,
  kReconstructionMismatch,
  kBadSpec,
  kParse,
};

std::string_view ErrorCodeName(ErrorCode code);

// Every failure surfaced by the library. The message names the offending
// input.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace cspath

#endif  // CSPATH_ERROR_H_
