#include <charconv>

#include "seal/minisql.hpp"

namespace seal::sql {

namespace {

class Parser {
 public:
  explicit Parser(std::span<const Token> tokens) : tokens_(tokens) {}

  Statement statement() {
    if (tokens_.empty()) throw SqlError(ErrorKind::SyntaxError, 0, "empty statement");
    Statement result;
    if (accept_keyword("SELECT")) {
      result = select();
    } else if (accept_keyword("UPDATE")) {
      result = update();
    } else {
      fail("expected SELECT or UPDATE");
    }
    if (pos_ < tokens_.size()) fail("unexpected trailing token");
    return result;
  }

 private:
  Statement select() {
    if (peek(TokenKind::IntLiteral)) {
      const auto& token = tokens_[pos_++];
      std::int64_t value = 0;
      auto [ptr, ec] =
          std::from_chars(token.lexeme.data(), token.lexeme.data() + token.lexeme.size(), value);
      if (ec != std::errc{}) {
        throw SqlError(ErrorKind::SyntaxError, token.position, "integer literal out of range");
      }
      return SelectConst{value};
    }
    SelectColumn select;
    select.column = identifier("column name");
    expect_keyword("FROM");
    select.table = identifier("table name");
    expect_keyword("WHERE");
    select.predicates = predicates();
    return select;
  }

  Statement update() {
    Update update;
    update.table = identifier("table name");
    expect_keyword("SET");
    do {
      Assignment assignment;
      assignment.column = identifier("column name");
      expect_symbol("=");
      assignment.value = value();
      update.assignments.push_back(std::move(assignment));
    } while (accept_symbol(","));
    expect_keyword("WHERE");
    update.predicates = predicates();
    return update;
  }

  std::vector<Predicate> predicates() {
    std::vector<Predicate> out;
    do {
      Predicate predicate;
      predicate.column = identifier("column name");
      expect_symbol("=");
      predicate.value = value();
      out.push_back(std::move(predicate));
    } while (accept_keyword("AND"));
    return out;
  }

  ValueExpr value() {
    if (pos_ >= tokens_.size()) fail("missing value");
    const auto& token = tokens_[pos_];
    switch (token.kind) {
      case TokenKind::StringLiteral:
      case TokenKind::IntLiteral:
        ++pos_;
        return token.lexeme;
      case TokenKind::Placeholder:
        ++pos_;
        return ParamSlot{next_slot_++};
      default:
        fail("expected a value");
    }
  }

  std::string identifier(const char* what) {
    if (!peek(TokenKind::Identifier)) fail(std::string("expected ") + what);
    return tokens_[pos_++].lexeme;
  }

  bool peek(TokenKind kind) const { return pos_ < tokens_.size() && tokens_[pos_].kind == kind; }

  bool accept_keyword(std::string_view keyword) {
    if (peek(TokenKind::Keyword) && tokens_[pos_].lexeme == keyword) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool accept_symbol(std::string_view symbol) {
    if (peek(TokenKind::Symbol) && tokens_[pos_].lexeme == symbol) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect_keyword(std::string_view keyword) {
    if (!accept_keyword(keyword)) fail("expected " + std::string(keyword));
  }

  void expect_symbol(std::string_view symbol) {
    if (!accept_symbol(symbol)) fail("expected '" + std::string(symbol) + "'");
  }

  [[noreturn]] void fail(const std::string& message) const {
    std::string detail = message;
    std::size_t position;
    if (pos_ < tokens_.size()) {
      position = tokens_[pos_].position;
      detail += " near '" + tokens_[pos_].lexeme + "'";
    } else {
      position = tokens_.back().position;
      detail += " at end of statement";
    }
    throw SqlError(ErrorKind::SyntaxError, position, detail);
  }

  std::span<const Token> tokens_;
  std::size_t pos_ = 0;
  std::size_t next_slot_ = 0;
};

}  // namespace

Statement parse_statement(std::span<const Token> tokens) { return Parser(tokens).statement(); }

std::size_t count_param_slots(const Statement& statement) {
  auto is_slot = [](const auto& item) {
    return std::holds_alternative<ParamSlot>(item.value) ? 1u : 0u;
  };
  return std::visit(
      [&](const auto& s) -> std::size_t {
        using T = std::decay_t<decltype(s)>;
        std::size_t n = 0;
        if constexpr (std::is_same_v<T, SelectColumn>) {
          for (const auto& p : s.predicates) n += is_slot(p);
        } else if constexpr (std::is_same_v<T, Update>) {
          for (const auto& a : s.assignments) n += is_slot(a);
          for (const auto& p : s.predicates) n += is_slot(p);
        }
        return n;
      },
      statement);
}

}  // namespace seal::sql
