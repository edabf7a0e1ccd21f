#ifndef CTA_ERROR_HPP
#define CTA_ERROR_HPP

#include <stdexcept>
#include <string>

namespace cta {

enum class ErrorCode {
  InvalidInterval,
  InvalidQuiver,
  LimitExceeded,
  Frozen,
  Ambiguous,
  Unsupported,
  Domain,
  ChainMismatch,
  EndpointMismatch,
  Mismatch,
  Unorientable,
  Parse,
  NotFound,
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace cta

#endif
