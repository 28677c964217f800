#include <utility>

#include "seal/minisql.hpp"

namespace seal::sql {

namespace {

using store::SensitiveStore;
using store::Table;

struct ResolvedPredicate {
  std::size_t column;
  std::string value;
};

const std::string& literal(const ValueExpr& value, std::size_t origin) {
  if (const auto* text = std::get_if<std::string>(&value)) return *text;
  throw SqlError(ErrorKind::ArityMismatch, origin, "unbound parameter slot");
}

Table resolve_table(std::string_view name, std::size_t origin) {
  auto table = SensitiveStore::find_table(name);
  if (!table) throw SqlError(ErrorKind::UnknownTable, origin, "no such table: " + std::string(name));
  return *table;
}

std::size_t resolve_column(Table table, std::string_view name, std::size_t origin) {
  auto column = SensitiveStore::find_column(table, name);
  if (!column) {
    throw SqlError(ErrorKind::UnknownColumn, origin, "no such column: " + std::string(name));
  }
  return *column;
}

std::vector<ResolvedPredicate> resolve(Table table, const std::vector<Predicate>& predicates,
                                       std::size_t origin) {
  std::vector<ResolvedPredicate> out;
  out.reserve(predicates.size());
  for (const auto& p : predicates) {
    out.push_back({resolve_column(table, p.column, origin), literal(p.value, origin)});
  }
  return out;
}

bool matches(const SensitiveStore& store, Table table, std::size_t row,
             const std::vector<ResolvedPredicate>& predicates) {
  for (const auto& p : predicates) {
    if (store.cell(table, row, p.column) != p.value) return false;
  }
  return true;
}

Rows select_rows(const SensitiveStore& store, const Statement& statement, std::size_t origin) {
  if (const auto* constant = std::get_if<SelectConst>(&statement)) {
    return {{std::to_string(constant->value)}};
  }
  const auto* select = std::get_if<SelectColumn>(&statement);
  if (select == nullptr) throw SqlError(ErrorKind::MutationRefused, origin, "not a SELECT");

  const auto table = resolve_table(select->table, origin);
  const auto column = resolve_column(table, select->column, origin);
  const auto predicates = resolve(table, select->predicates, origin);
  Rows rows;
  for (std::size_t row = 0; row < store.row_count(table); ++row) {
    if (matches(store, table, row, predicates)) rows.push_back({store.cell(table, row, column)});
  }
  return rows;
}

void apply_update(SensitiveStore& store, const Update& update, std::size_t origin) {
  const auto table = resolve_table(update.table, origin);
  std::vector<std::pair<std::size_t, std::string>> assignments;
  for (const auto& a : update.assignments) {
    assignments.emplace_back(resolve_column(table, a.column, origin), literal(a.value, origin));
  }
  const auto predicates = resolve(table, update.predicates, origin);

  std::vector<std::size_t> targets;
  for (std::size_t row = 0; row < store.row_count(table); ++row) {
    if (matches(store, table, row, predicates)) targets.push_back(row);
  }
  // Stage on a copy so a rejected value leaves the store untouched.
  SensitiveStore next = store;
  for (auto row : targets) {
    for (const auto& [column, value] : assignments) next.assign(table, row, column, value);
  }
  next.check_invariants();
  store = std::move(next);
}

void run_statement(SensitiveStore& store, std::span<const Token> tokens,
                   ExecutionReport& report) {
  const auto origin = tokens.front().position;
  const auto statement = parse_statement(tokens);
  if (const auto* update = std::get_if<Update>(&statement)) {
    if (count_param_slots(statement) != 0) {
      throw SqlError(ErrorKind::ArityMismatch, origin, "parameters are not allowed in scripts");
    }
    apply_update(store, *update, origin);
    ++report.mutations_applied;
  } else {
    select_rows(store, statement, origin);
    ++report.discarded_result_sets;
  }
  ++report.statements_executed;
}

}  // namespace

std::string interpolate(std::string_view sql_template, std::string_view value) {
  const auto first = sql_template.find("%s");
  if (first == std::string_view::npos) {
    throw SqlError(ErrorKind::BadTemplate, 0, "template has no %s");
  }
  if (sql_template.find("%s", first + 2) != std::string_view::npos) {
    throw SqlError(ErrorKind::BadTemplate, first, "template has more than one %s");
  }
  std::string out;
  out.reserve(sql_template.size() + value.size());
  out += sql_template.substr(0, first);
  out += value;
  out += sql_template.substr(first + 2);
  return out;
}

void execute_script(SensitiveStore& store, std::string_view sql, ExecutionReport& report) {
  Lexer lexer(sql, false);
  std::vector<Token> pending;
  while (auto token = lexer.next()) {
    if (token->kind == TokenKind::Symbol && token->lexeme == ";") {
      if (!pending.empty()) run_statement(store, pending, report);
      pending.clear();
    } else {
      pending.push_back(std::move(*token));
    }
  }
  if (!pending.empty()) run_statement(store, pending, report);
}

ExecutionReport execute_script(SensitiveStore& store, std::string_view sql) {
  ExecutionReport report;
  execute_script(store, sql, report);
  return report;
}

Rows evaluate(const SensitiveStore& store, const Statement& statement) {
  return select_rows(store, statement, 0);
}

Rows query(const SensitiveStore& store, std::string_view sql) {
  const auto tokens = tokenize(sql, false);
  const auto slices = split_statements(tokens);
  if (slices.empty()) throw SqlError(ErrorKind::SyntaxError, 0, "empty statement");
  if (slices.size() > 1) {
    throw SqlError(ErrorKind::MultipleStatements, slices[1].front().position,
                   "only one statement may be executed");
  }
  const auto statement = parse_statement(slices.front());
  return select_rows(store, statement, slices.front().front().position);
}

PreparedStatement PreparedStatement::prepare(std::string_view sql_template) {
  const auto tokens = tokenize(sql_template, true);
  const auto slices = split_statements(tokens);
  if (slices.empty()) throw SqlError(ErrorKind::SyntaxError, 0, "empty statement");
  if (slices.size() > 1) {
    throw SqlError(ErrorKind::MultipleStatements, slices[1].front().position,
                   "template contains more than one statement");
  }
  auto statement = parse_statement(slices.front());
  if (std::holds_alternative<Update>(statement)) {
    throw SqlError(ErrorKind::MutationRefused, slices.front().front().position,
                   "mutating statements cannot be parameterized");
  }
  const auto count = count_param_slots(statement);
  return PreparedStatement(std::move(statement), count);
}

Statement PreparedStatement::bind(std::span<const std::string> params) const {
  if (params.size() != parameter_count_) {
    throw SqlError(ErrorKind::ArityMismatch, 0,
                   "expected " + std::to_string(parameter_count_) + " parameters, got " +
                       std::to_string(params.size()));
  }
  Statement bound = statement_;
  auto fill = [&](ValueExpr& value) {
    if (const auto* slot = std::get_if<ParamSlot>(&value)) value = params[slot->index];
  };
  if (auto* select = std::get_if<SelectColumn>(&bound)) {
    for (auto& p : select->predicates) fill(p.value);
  }
  return bound;
}

Rows execute_parameterized(const SensitiveStore& store, std::string_view sql_template,
                           std::span<const std::string> params) {
  const auto prepared = PreparedStatement::prepare(sql_template);
  return evaluate(store, prepared.bind(params));
}

}  // namespace seal::sql
