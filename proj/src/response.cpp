#include "seal/response.hpp"

#include <array>
#include <utility>

#include "seal/rows.hpp"

namespace seal {

Response Response::granted(std::string_view username) {
  std::string message(username);
  message += messages::kGrantedSuffix;
  return {Kind::Granted, std::move(message)};
}

Response Response::denied(std::string_view username) {
  std::string message(username);
  message += messages::kDeniedSuffix;
  return {Kind::Denied, std::move(message)};
}

Response Response::not_found() {
  return {Kind::NotFound, std::string(messages::kNotFound)};
}

Response Response::obscured() {
  return {Kind::Obscured, std::string(messages::kObscured)};
}

Response Response::rejected() {
  return {Kind::ValidationRejected, std::string(messages::kInvalidInput)};
}

namespace {

constexpr std::array<std::pair<Response::Kind, std::string_view>, 5> kKindNames{{
    {Response::Kind::Granted, "granted"},
    {Response::Kind::Denied, "denied"},
    {Response::Kind::NotFound, "notfound"},
    {Response::Kind::Obscured, "obscured"},
    {Response::Kind::ValidationRejected, "rejected"},
}};

}  // namespace

std::string_view to_string(Response::Kind kind) {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

std::optional<Response::Kind> parse_response_kind(std::string_view text) {
  for (const auto& [k, name] : kKindNames) {
    if (name == text) return k;
  }
  return std::nullopt;
}

std::string render_row(const Row& row) {
  std::string out = "(";
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i > 0) out += ", ";
    out += '\'';
    out += row[i];
    out += '\'';
  }
  if (row.size() == 1) out += ',';
  out += ')';
  return out;
}

}  // namespace seal
