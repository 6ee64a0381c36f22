#pragma once

#include <stdexcept>
#include <string>

namespace nca {

// Library-wide exception. `code` is a stable machine-readable tag (the CLI
// forwards it verbatim in JSON error payloads); `what()` is human prose.
class error : public std::runtime_error {
 public:
  error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

}  // namespace nca
