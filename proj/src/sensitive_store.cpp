#include "seal/sensitive_store.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <sstream>
#include <utility>

namespace seal::store {

namespace {

constexpr std::array<std::string_view, 4> kUserColumns{"Username", "Student", "Faculty",
                                                       "Trust"};
constexpr std::array<std::string_view, 2> kAuthorizationColumns{"Trust", "Privilege"};

bool iequals(std::string_view a, std::string_view b) {
  return std::ranges::equal(a, b, [](unsigned char x, unsigned char y) {
    return std::tolower(x) == std::tolower(y);
  });
}

std::string_view bool_text(bool value) { return value ? "True" : "False"; }

std::optional<bool> parse_bool(std::string_view text) {
  if (iequals(text, "true") || text == "1") return true;
  if (iequals(text, "false") || text == "0") return false;
  return std::nullopt;
}

void check_user(const UserRecord& user) {
  if (!is_valid_username(user.username)) {
    throw StoreError(ErrorKind::InvalidValue, "invalid username '" + user.username + "'");
  }
  if (user.student == user.faculty) {
    throw StoreError(ErrorKind::InvariantViolation,
                     "user '" + user.username + "' must be exactly one of student or faculty");
  }
}

}  // namespace

std::string_view to_string(TrustLevel trust) {
  return trust == TrustLevel::T1 ? "T1" : "T2";
}

std::string_view to_string(Privilege privilege) {
  return privilege == Privilege::ViewGrades ? "View Grades" : "Enter Grades";
}

std::optional<TrustLevel> parse_trust(std::string_view text) {
  if (text == "T1") return TrustLevel::T1;
  if (text == "T2") return TrustLevel::T2;
  return std::nullopt;
}

std::optional<Privilege> parse_privilege(std::string_view text) {
  if (text == "View Grades") return Privilege::ViewGrades;
  if (text == "Enter Grades") return Privilege::EnterGrades;
  return std::nullopt;
}

bool is_valid_username(std::string_view username) {
  if (username.empty()) return false;
  return std::ranges::all_of(username, [](unsigned char c) { return c > 0x20 && c != 0x7f; });
}

void SensitiveStore::add_user(UserRecord user) {
  check_user(user);
  if (get_user(user.username)) {
    throw StoreError(ErrorKind::InvariantViolation, "duplicate username '" + user.username + "'");
  }
  users_.push_back(std::move(user));
}

void SensitiveStore::add_authorization(AuthorizationRecord record) {
  const bool duplicate = std::ranges::any_of(
      authorization_, [&](const AuthorizationRecord& r) { return r.trust == record.trust; });
  if (duplicate) {
    throw StoreError(ErrorKind::InvariantViolation,
                     "duplicate authorization trust " + std::string(to_string(record.trust)));
  }
  authorization_.push_back(record);
}

std::optional<UserRecord> SensitiveStore::get_user(std::string_view username) const {
  auto it = std::ranges::find(users_, username, &UserRecord::username);
  if (it == users_.end()) return std::nullopt;
  return *it;
}

void SensitiveStore::set_trust(std::string_view username, TrustLevel trust) {
  auto it = std::ranges::find(users_, username, &UserRecord::username);
  if (it == users_.end()) {
    throw StoreError(ErrorKind::UnknownUser, "unknown user '" + std::string(username) + "'");
  }
  it->trust = trust;
}

Rows SensitiveStore::list_user_privileges() const {
  Rows rows;
  rows.reserve(users_.size());
  for (const auto& user : users_) {
    auto auth = std::ranges::find(authorization_, user.trust, &AuthorizationRecord::trust);
    if (auth == authorization_.end()) {
      throw StoreError(ErrorKind::DanglingTrust,
                       "user '" + user.username + "' has trust " +
                           std::string(to_string(user.trust)) + " with no authorization row");
    }
    rows.push_back({user.username, std::string(to_string(auth->privilege))});
  }
  return rows;
}

Digest SensitiveStore::digest() const {
  std::vector<std::string> lines;
  lines.reserve(users_.size() + authorization_.size());
  // Usernames contain no whitespace, so space-separated fields are unambiguous.
  for (const auto& user : users_) {
    lines.push_back("u " + user.username + ' ' + std::string(bool_text(user.student)) + ' ' +
                    std::string(bool_text(user.faculty)) + ' ' +
                    std::string(to_string(user.trust)));
  }
  for (const auto& auth : authorization_) {
    lines.push_back("a " + std::string(to_string(auth.trust)) + ' ' +
                    std::string(to_string(auth.privilege)));
  }
  std::ranges::sort(lines);
  std::string canonical;
  for (const auto& line : lines) {
    canonical += line;
    canonical += '\n';
  }
  return Digest(std::move(canonical));
}

std::optional<Table> SensitiveStore::find_table(std::string_view name) {
  if (iequals(name, "users")) return Table::Users;
  if (iequals(name, "authorization")) return Table::Authorization;
  return std::nullopt;
}

std::span<const std::string_view> SensitiveStore::columns(Table table) {
  if (table == Table::Users) return kUserColumns;
  return kAuthorizationColumns;
}

std::optional<std::size_t> SensitiveStore::find_column(Table table, std::string_view name) {
  const auto cols = columns(table);
  for (std::size_t i = 0; i < cols.size(); ++i) {
    if (iequals(cols[i], name)) return i;
  }
  return std::nullopt;
}

std::size_t SensitiveStore::row_count(Table table) const noexcept {
  return table == Table::Users ? users_.size() : authorization_.size();
}

std::string SensitiveStore::cell(Table table, std::size_t row, std::size_t column) const {
  if (table == Table::Users) {
    const auto& user = users_.at(row);
    switch (column) {
      case 0: return user.username;
      case 1: return std::string(bool_text(user.student));
      case 2: return std::string(bool_text(user.faculty));
      case 3: return std::string(to_string(user.trust));
    }
  } else {
    const auto& auth = authorization_.at(row);
    switch (column) {
      case 0: return std::string(to_string(auth.trust));
      case 1: return std::string(to_string(auth.privilege));
    }
  }
  throw std::out_of_range("column index out of range");
}

void SensitiveStore::assign(Table table, std::size_t row, std::size_t column,
                            std::string_view value) {
  auto invalid = [&] {
    return StoreError(ErrorKind::InvalidValue,
                      "invalid value '" + std::string(value) + "' for column " +
                          std::string(columns(table)[column]));
  };
  if (table == Table::Users) {
    auto& user = users_.at(row);
    switch (column) {
      case 0:
        if (!is_valid_username(value)) throw invalid();
        user.username = std::string(value);
        return;
      case 1:
      case 2: {
        auto flag = parse_bool(value);
        if (!flag) throw invalid();
        (column == 1 ? user.student : user.faculty) = *flag;
        return;
      }
      case 3: {
        auto trust = parse_trust(value);
        if (!trust) throw invalid();
        user.trust = *trust;
        return;
      }
    }
  } else {
    auto& auth = authorization_.at(row);
    switch (column) {
      case 0: {
        auto trust = parse_trust(value);
        if (!trust) throw invalid();
        auth.trust = *trust;
        return;
      }
      case 1: {
        auto privilege = parse_privilege(value);
        if (!privilege) throw invalid();
        auth.privilege = *privilege;
        return;
      }
    }
  }
  throw std::out_of_range("column index out of range");
}

void SensitiveStore::check_invariants() const {
  for (std::size_t i = 0; i < users_.size(); ++i) {
    check_user(users_[i]);
    for (std::size_t j = i + 1; j < users_.size(); ++j) {
      if (users_[i].username == users_[j].username) {
        throw StoreError(ErrorKind::InvariantViolation,
                         "duplicate username '" + users_[i].username + "'");
      }
    }
  }
  for (std::size_t i = 0; i < authorization_.size(); ++i) {
    for (std::size_t j = i + 1; j < authorization_.size(); ++j) {
      if (authorization_[i].trust == authorization_[j].trust) {
        throw StoreError(ErrorKind::InvariantViolation,
                         "duplicate authorization trust " +
                             std::string(to_string(authorization_[i].trust)));
      }
    }
  }
}

SensitiveStore seed_default() {
  SensitiveStore store;
  store.add_user({"User1", true, false, TrustLevel::T1});
  store.add_user({"User2", false, true, TrustLevel::T2});
  store.add_authorization({TrustLevel::T1, Privilege::ViewGrades});
  store.add_authorization({TrustLevel::T2, Privilege::EnterGrades});
  return store;
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Splits off the next whitespace-delimited word.
std::string_view next_word(std::string_view& rest) {
  rest = trim(rest);
  const auto end = rest.find_first_of(" \t");
  auto word = rest.substr(0, end);
  rest = end == std::string_view::npos ? std::string_view{} : rest.substr(end);
  return word;
}

}  // namespace

SensitiveStore load_seed(std::string_view text) {
  SensitiveStore store;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    auto line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (line.empty() || line.front() == '#') continue;

    auto fail = [&](const std::string& why) {
      return StoreError(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": " + why,
                        line_no);
    };

    auto rest = line;
    const auto directive = next_word(rest);
    try {
      if (directive == "user") {
        UserRecord user;
        user.username = std::string(next_word(rest));
        const auto role = next_word(rest);
        const auto trust_text = next_word(rest);
        if (user.username.empty() || role.empty() || trust_text.empty() || !trim(rest).empty()) {
          throw fail("expected: user <username> <student|faculty> <T1|T2>");
        }
        if (role == "student") {
          user.student = true;
        } else if (role == "faculty") {
          user.faculty = true;
        } else {
          throw fail("unknown role '" + std::string(role) + "'");
        }
        auto trust = parse_trust(trust_text);
        if (!trust) throw fail("unknown trust level '" + std::string(trust_text) + "'");
        user.trust = *trust;
        store.add_user(std::move(user));
      } else if (directive == "auth") {
        const auto trust_text = next_word(rest);
        auto trust = parse_trust(trust_text);
        if (!trust) throw fail("unknown trust level '" + std::string(trust_text) + "'");
        auto quoted = trim(rest);
        if (quoted.size() < 2 || quoted.front() != '"' || quoted.back() != '"') {
          throw fail("expected quoted privilege text");
        }
        const auto privilege_text = quoted.substr(1, quoted.size() - 2);
        auto privilege = parse_privilege(privilege_text);
        if (!privilege) throw fail("unknown privilege \"" + std::string(privilege_text) + "\"");
        store.add_authorization({*trust, *privilege});
      } else {
        throw fail("unknown directive '" + std::string(directive) + "'");
      }
    } catch (const StoreError& e) {
      if (e.line() != 0) throw;
      throw StoreError(e.kind(), "line " + std::to_string(line_no) + ": " + e.what(), line_no);
    }
  }
  return store;
}

std::string save_seed(const SensitiveStore& store) {
  std::ostringstream out;
  out << "# users: user <username> <student|faculty> <T1|T2>\n";
  for (const auto& user : store.users()) {
    out << "user " << user.username << ' ' << (user.student ? "student" : "faculty") << ' '
        << to_string(user.trust) << '\n';
  }
  out << "# authorization: auth <T1|T2> \"<privilege>\"\n";
  for (const auto& auth : store.authorization()) {
    out << "auth " << to_string(auth.trust) << " \"" << to_string(auth.privilege) << "\"\n";
  }
  return out.str();
}

}  // namespace seal::store
