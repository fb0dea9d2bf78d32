#pragma once

#include <stdexcept>
#include <string>

namespace lnd {

// Every failure raised by the library carries a short machine-readable code
// ("relation", "cap", "parse", ...) next to the human-readable message.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

namespace errc {
inline constexpr const char* signature = "signature";
inline constexpr const char* index = "index";
inline constexpr const char* cap = "cap";
inline constexpr const char* relation = "relation";
inline constexpr const char* jacobian = "jacobian";
inline constexpr const char* nonconstant = "nonconstant";
inline constexpr const char* kernel = "kernel";
inline constexpr const char* unit = "unit";
inline constexpr const char* unverified = "unverified";
inline constexpr const char* table = "table";
inline constexpr const char* homogeneity = "homogeneity";
inline constexpr const char* system = "system";
inline constexpr const char* parse = "parse";
inline constexpr const char* usage = "usage";
}  // namespace errc

}  // namespace lnd
