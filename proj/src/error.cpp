#include "cta/error.hpp"

namespace cta {

const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidInterval: return "INVALID_INTERVAL";
    case ErrorCode::InvalidQuiver: return "INVALID_QUIVER";
    case ErrorCode::LimitExceeded: return "LIMIT_EXCEEDED";
    case ErrorCode::Frozen: return "FROZEN";
    case ErrorCode::Ambiguous: return "AMBIGUOUS";
    case ErrorCode::Unsupported: return "UNSUPPORTED";
    case ErrorCode::Domain: return "DOMAIN";
    case ErrorCode::ChainMismatch: return "CHAIN_MISMATCH";
    case ErrorCode::EndpointMismatch: return "ENDPOINT_MISMATCH";
    case ErrorCode::Mismatch: return "MISMATCH";
    case ErrorCode::Unorientable: return "UNORIENTABLE";
    case ErrorCode::Parse: return "PARSE";
    case ErrorCode::NotFound: return "NOT_FOUND";
  }
  return "UNKNOWN";
}

}  // namespace cta
