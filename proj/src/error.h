#pragma once

#include <stdexcept>
#include <string>

namespace rupert {

enum class ErrorCode {
  kUnknownName,
  kParse,
  kDegenerate,       // degenerate geometry or silhouette
  kUnbounded,        // mu = infinity where a finite value is required
  kNonconvergence,   // iterative solve missed its gap tolerance
  kBudget,
  kIo,
  kInvalid,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace rupert
