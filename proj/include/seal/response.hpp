#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace seal {

/// The user-visible outcome of one injected request.
struct Response {
  enum class Kind { Granted, Denied, NotFound, Obscured, ValidationRejected };

  Kind kind;
  std::string message;

  static Response granted(std::string_view username);
  static Response denied(std::string_view username);
  static Response not_found();
  static Response obscured();
  static Response rejected();

  bool operator==(const Response&) const = default;
};

// Fixed message catalog. Only Granted/Denied interpolate anything, and only a
// username that was found in the store.
namespace messages {
inline constexpr std::string_view kNotFound = "User doesn't exist";
inline constexpr std::string_view kObscured = "Something went wrong";
inline constexpr std::string_view kInvalidInput = "Invalid input";
inline constexpr std::string_view kGrantedSuffix =
    " is a faculty member with authorization privileges";
inline constexpr std::string_view kDeniedSuffix =
    " doesn't have faculty authorization privileges";
}  // namespace messages

// Lower-case names used by scenario files: granted, denied, notfound,
// obscured, rejected.
std::string_view to_string(Response::Kind kind);
std::optional<Response::Kind> parse_response_kind(std::string_view text);

}  // namespace seal
