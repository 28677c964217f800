#pragma once

#include <set>
#include <string>
#include <string_view>

#include "seal/minisql.hpp"
#include "seal/response.hpp"
#include "seal/sensitive_store.hpp"

namespace seal::grades {

enum class Mode { Vulnerable, Seal };

std::string_view to_string(Mode mode);

// Interpolated trust lookup, injectable through the quoted username.
inline constexpr std::string_view kScriptTrustQuery =
    "SELECT Trust FROM users WHERE Username = '%s'";
// Parameterized trust lookup.
inline constexpr std::string_view kTrustQuery = "SELECT Trust FROM users WHERE username = ?";
inline constexpr std::string_view kPrivilegeQuery =
    "SELECT Privilege FROM authorization WHERE Trust = ?";

// The printable form of the error the vulnerable check hands back for a
// missing user.
inline constexpr std::string_view kLeakedNotFound = R"(ValueError("User doesn't exist!"))";

struct VulnerableCheck {
  Response response;
  sql::ExecutionReport report;
};

/**
 * Faculty check built on scripted execution of the interpolated trust query.
 *
 * Whatever the script mutates stays mutated. A script of more than one
 * statement never yields rows, so it always ends in the leaked not-found
 * error. A single-statement script is re-run as a query to read the trust
 * level: "T2" grants, anything else denies, no row leaks not-found. SQL
 * errors are returned verbatim as the message of a NotFound response.
 * Granted/Denied messages are "True"/"False".
 */
VulnerableCheck has_entergrades_vulnerable(store::SensitiveStore& store,
                                           std::string_view username_raw);

/**
 * Whitelisted, parameterized faculty check. Grants when the user's trust
 * level maps to "Enter Grades" in the authorization table, denies when it maps
 * elsewhere, and answers anything else (not whitelisted, dangling trust) with
 * the obscured response. Never mutates the store.
 */
Response has_entergrades_secure(const store::SensitiveStore& store, std::string_view username);

std::set<std::string> whitelist(const store::SensitiveStore& store);

}  // namespace seal::grades
