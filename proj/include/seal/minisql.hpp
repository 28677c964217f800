#pragma once

// A deliberately small SQL dialect: single-table SELECT / UPDATE with
// AND-joined equality predicates, plus `SELECT <int>`. Two execution paths
// share the lexer and parser:
//
//   execute_script()         stacked statements, mutations persist, result
//                            sets are discarded (the injectable path)
//   execute_parameterized()  one pre-parsed, read-only statement with values
//                            bound into the AST after parsing

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "seal/rows.hpp"
#include "seal/sensitive_store.hpp"

namespace seal::sql {

enum class ErrorKind {
  UnterminatedStringLiteral,
  IllegalCharacter,
  SyntaxError,
  BadTemplate,
  UnknownTable,
  UnknownColumn,
  ArityMismatch,
  MultipleStatements,
  MutationRefused,
};

std::string_view to_string(ErrorKind kind);

class SqlError : public std::runtime_error {
 public:
  SqlError(ErrorKind kind, std::size_t position, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }
  // Byte offset into the text being processed.
  std::size_t position() const noexcept { return position_; }

 private:
  ErrorKind kind_;
  std::size_t position_;
};

// ---------------------------------------------------------------------------
// Lexing

enum class TokenKind { Keyword, Identifier, StringLiteral, IntLiteral, Symbol, Placeholder };

std::string_view to_string(TokenKind kind);

struct Token {
  TokenKind kind;
  // Keywords are upper-cased; string literals exclude their quotes.
  std::string lexeme;
  std::size_t position;

  bool operator==(const Token&) const = default;
};

/// Pull-based lexer. Errors surface only when the offending byte is reached,
/// so statement-at-a-time consumers run everything before it.
class Lexer {
 public:
  Lexer(std::string_view sql, bool allow_placeholders)
      : sql_(sql), allow_placeholders_(allow_placeholders) {}

  std::optional<Token> next();

 private:
  std::string_view sql_;
  bool allow_placeholders_;
  std::size_t pos_ = 0;
};

std::vector<Token> tokenize(std::string_view sql, bool allow_placeholders = false);

// Splits on top-level `;` symbols, dropping empty slices.
std::vector<std::span<const Token>> split_statements(std::span<const Token> tokens);

// ---------------------------------------------------------------------------
// AST

struct ParamSlot {
  std::size_t index;
  bool operator==(const ParamSlot&) const = default;
};

using ValueExpr = std::variant<std::string, ParamSlot>;

struct Predicate {
  std::string column;
  ValueExpr value;
  bool operator==(const Predicate&) const = default;
};

struct Assignment {
  std::string column;
  ValueExpr value;
  bool operator==(const Assignment&) const = default;
};

struct SelectColumn {
  std::string column;
  std::string table;
  std::vector<Predicate> predicates;
  bool operator==(const SelectColumn&) const = default;
};

struct SelectConst {
  std::int64_t value;
  bool operator==(const SelectConst&) const = default;
};

struct Update {
  std::string table;
  std::vector<Assignment> assignments;
  std::vector<Predicate> predicates;
  bool operator==(const Update&) const = default;
};

using Statement = std::variant<SelectColumn, SelectConst, Update>;

Statement parse_statement(std::span<const Token> tokens);

std::size_t count_param_slots(const Statement& statement);

// ---------------------------------------------------------------------------
// Execution

struct ExecutionReport {
  std::size_t statements_executed = 0;
  std::size_t mutations_applied = 0;  // UPDATE statements applied
  std::size_t discarded_result_sets = 0;

  bool operator==(const ExecutionReport&) const = default;
};

// Textual substitution of `value` for the single `%s` in `sql_template`. No
// quoting, no escaping.
std::string interpolate(std::string_view sql_template, std::string_view value);

/**
 * Runs every `;`-separated statement in order. UPDATEs are applied to the
 * store as they execute (each statement is all-or-nothing); SELECT result
 * sets are discarded. A lex, parse or execution error aborts the remainder
 * but keeps earlier mutations. `report` reflects the statements that ran,
 * including when an error is thrown.
 */
void execute_script(store::SensitiveStore& store, std::string_view sql, ExecutionReport& report);
ExecutionReport execute_script(store::SensitiveStore& store, std::string_view sql);

// Evaluates a fully bound read-only statement.
Rows evaluate(const store::SensitiveStore& store, const Statement& statement);

// Runs exactly one read-only statement given as plain text (no placeholders).
Rows query(const store::SensitiveStore& store, std::string_view sql);

/// A template parsed before any value is seen. Binding substitutes values
/// into parameter slots of the AST; bound text is never lexed.
class PreparedStatement {
 public:
  static PreparedStatement prepare(std::string_view sql_template);

  const Statement& statement() const noexcept { return statement_; }
  std::size_t parameter_count() const noexcept { return parameter_count_; }

  Statement bind(std::span<const std::string> params) const;

 private:
  PreparedStatement(Statement statement, std::size_t parameter_count)
      : statement_(std::move(statement)), parameter_count_(parameter_count) {}

  Statement statement_;
  std::size_t parameter_count_;
};

Rows execute_parameterized(const store::SensitiveStore& store, std::string_view sql_template,
                           std::span<const std::string> params);

}  // namespace seal::sql
