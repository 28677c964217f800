#include "seal/grade_service.hpp"

#include <array>

namespace seal::grades {

std::string_view to_string(Mode mode) { return mode == Mode::Seal ? "seal" : "vulnerable"; }

VulnerableCheck has_entergrades_vulnerable(store::SensitiveStore& store,
                                           std::string_view username_raw) {
  VulnerableCheck check{Response::not_found(), {}};
  const auto leaked = Response{Response::Kind::NotFound, std::string(kLeakedNotFound)};
  try {
    const auto sql = sql::interpolate(kScriptTrustQuery, username_raw);
    sql::execute_script(store, sql, check.report);
    if (check.report.statements_executed != 1) {
      check.response = leaked;
      return check;
    }
    const auto rows = sql::query(store, sql);
    if (rows.empty()) {
      check.response = leaked;
    } else if (rows.front().front() == "T2") {
      check.response = {Response::Kind::Granted, "True"};
    } else {
      check.response = {Response::Kind::Denied, "False"};
    }
  } catch (const std::exception& e) {
    check.response = {Response::Kind::NotFound, e.what()};
  }
  return check;
}

Response has_entergrades_secure(const store::SensitiveStore& store, std::string_view username) {
  const auto members = whitelist(store);
  if (!members.contains(std::string(username))) return Response::obscured();

  const std::array<std::string, 1> user{std::string(username)};
  const auto trust = sql::execute_parameterized(store, kTrustQuery, user);
  if (trust.size() != 1) return Response::obscured();

  const std::array<std::string, 1> level{trust.front().front()};
  const auto privilege = sql::execute_parameterized(store, kPrivilegeQuery, level);
  if (privilege.size() != 1) return Response::obscured();

  if (privilege.front().front() == store::to_string(store::Privilege::EnterGrades)) {
    return Response::granted(username);
  }
  return Response::denied(username);
}

std::set<std::string> whitelist(const store::SensitiveStore& store) {
  std::set<std::string> names;
  for (const auto& user : store.users()) names.insert(user.username);
  return names;
}

}  // namespace seal::grades
