#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "seal/rows.hpp"

namespace seal::store {

enum class TrustLevel { T1, T2 };
enum class Privilege { ViewGrades, EnterGrades };

std::string_view to_string(TrustLevel trust);
std::string_view to_string(Privilege privilege);
std::optional<TrustLevel> parse_trust(std::string_view text);
std::optional<Privilege> parse_privilege(std::string_view text);

struct UserRecord {
  std::string username;
  bool student = false;
  bool faculty = false;
  TrustLevel trust = TrustLevel::T1;

  bool operator==(const UserRecord&) const = default;
};

struct AuthorizationRecord {
  TrustLevel trust = TrustLevel::T1;
  Privilege privilege = Privilege::ViewGrades;

  bool operator==(const AuthorizationRecord&) const = default;
};

enum class ErrorKind {
  UnknownUser,
  DanglingTrust,
  ParseError,
  InvariantViolation,
  InvalidValue,
};

class StoreError : public std::runtime_error {
 public:
  StoreError(ErrorKind kind, const std::string& what, std::size_t line = 0)
      : std::runtime_error(what), kind_(kind), line_(line) {}

  ErrorKind kind() const noexcept { return kind_; }
  // 1-based line number for seed-file errors, 0 otherwise.
  std::size_t line() const noexcept { return line_; }

 private:
  ErrorKind kind_;
  std::size_t line_;
};

// Tables reachable from the SQL executor.
enum class Table { Users, Authorization };

/// Canonical, order-independent fingerprint of a store's contents.
class Digest {
 public:
  explicit Digest(std::string canonical) : canonical_(std::move(canonical)) {}
  const std::string& str() const noexcept { return canonical_; }
  bool operator==(const Digest&) const = default;

 private:
  std::string canonical_;
};

/**
 * The protected tier: a `Users` table and an `Authorization` table.
 *
 * Structural invariants (unique usernames, unique authorization trust,
 * student XOR faculty, well-formed usernames) are enforced on every
 * mutation. The pairing between a user's role and trust level is not: a
 * student holding T2 is representable, since that is exactly the state a
 * successful UPDATE-based injection produces.
 */
class SensitiveStore {
 public:
  SensitiveStore() = default;

  const std::vector<UserRecord>& users() const noexcept { return users_; }
  const std::vector<AuthorizationRecord>& authorization() const noexcept {
    return authorization_;
  }

  void add_user(UserRecord user);
  void add_authorization(AuthorizationRecord record);

  // Case-sensitive exact match.
  std::optional<UserRecord> get_user(std::string_view username) const;
  void set_trust(std::string_view username, TrustLevel trust);

  // One (username, privilege) row per user in insertion order. Throws
  // DanglingTrust when a user's trust has no authorization row.
  Rows list_user_privileges() const;

  Digest digest() const;

  // Relational view used by the SQL executor. Table and column names
  // resolve case-insensitively; cell values are text ("True"/"False" for the
  // role flags, "T1"/"T2" for trust levels).
  static std::optional<Table> find_table(std::string_view name);
  static std::span<const std::string_view> columns(Table table);
  static std::optional<std::size_t> find_column(Table table, std::string_view name);

  std::size_t row_count(Table table) const noexcept;
  std::string cell(Table table, std::size_t row, std::size_t column) const;

  // Validates the value's domain only; call check_invariants() once all
  // assignments of a statement are applied.
  void assign(Table table, std::size_t row, std::size_t column, std::string_view value);
  void check_invariants() const;

  bool operator==(const SensitiveStore&) const = default;

 private:
  std::vector<UserRecord> users_;
  std::vector<AuthorizationRecord> authorization_;
};

// User1 (student, T1), User2 (faculty, T2); T1 -> View Grades,
// T2 -> Enter Grades.
SensitiveStore seed_default();

/**
 * Line-oriented seed format; blank lines and lines starting with `#` are
 * ignored:
 *
 *     user <username> <student|faculty> <T1|T2>
 *     auth <T1|T2> "<privilege text>"
 *
 * Throws StoreError{ParseError} with the offending line number, or
 * StoreError{InvariantViolation} for duplicate keys.
 */
SensitiveStore load_seed(std::string_view text);
std::string save_seed(const SensitiveStore& store);

bool is_valid_username(std::string_view username);

}  // namespace seal::store
