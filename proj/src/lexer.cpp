#include <array>
#include <cctype>

#include "seal/minisql.hpp"

namespace seal::sql {

namespace {

constexpr std::array<std::string_view, 6> kKeywords{"SELECT", "UPDATE", "SET",
                                                    "FROM",   "WHERE",  "AND"};

bool is_ident_start(unsigned char c) { return std::isalpha(c) || c == '_'; }
bool is_ident_char(unsigned char c) { return std::isalnum(c) || c == '_'; }
bool is_space(unsigned char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }
bool is_symbol(unsigned char c) {
  return c == ';' || c == '=' || c == ',' || c == '*' || c == '(' || c == ')';
}

std::string upper(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UnterminatedStringLiteral: return "UnterminatedStringLiteral";
    case ErrorKind::IllegalCharacter: return "IllegalCharacter";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::BadTemplate: return "BadTemplate";
    case ErrorKind::UnknownTable: return "UnknownTable";
    case ErrorKind::UnknownColumn: return "UnknownColumn";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::MultipleStatements: return "MultipleStatements";
    case ErrorKind::MutationRefused: return "MutationRefused";
  }
  return "Unknown";
}

SqlError::SqlError(ErrorKind kind, std::size_t position, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + " at offset " + std::to_string(position) +
                         ": " + detail),
      kind_(kind),
      position_(position) {}

std::string_view to_string(TokenKind kind) {
  switch (kind) {
    case TokenKind::Keyword: return "Keyword";
    case TokenKind::Identifier: return "Identifier";
    case TokenKind::StringLiteral: return "StringLiteral";
    case TokenKind::IntLiteral: return "IntLiteral";
    case TokenKind::Symbol: return "Symbol";
    case TokenKind::Placeholder: return "Placeholder";
  }
  return "Unknown";
}

std::optional<Token> Lexer::next() {
  while (pos_ < sql_.size()) {
    const auto c = static_cast<unsigned char>(sql_[pos_]);
    if (is_space(c)) {
      ++pos_;
      continue;
    }
    if (c == '-' && pos_ + 1 < sql_.size() && sql_[pos_ + 1] == '-') {
      const auto nl = sql_.find('\n', pos_);
      pos_ = nl == std::string_view::npos ? sql_.size() : nl + 1;
      continue;
    }
    break;
  }
  if (pos_ >= sql_.size()) return std::nullopt;

  const std::size_t start = pos_;
  const auto c = static_cast<unsigned char>(sql_[pos_]);

  if (c == '\'') {
    const auto close = sql_.find('\'', start + 1);
    if (close == std::string_view::npos) {
      pos_ = sql_.size();
      throw SqlError(ErrorKind::UnterminatedStringLiteral, start, "unterminated string literal");
    }
    pos_ = close + 1;
    return Token{TokenKind::StringLiteral, std::string(sql_.substr(start + 1, close - start - 1)),
                 start};
  }
  if (is_ident_start(c)) {
    while (pos_ < sql_.size() && is_ident_char(static_cast<unsigned char>(sql_[pos_]))) ++pos_;
    auto word = sql_.substr(start, pos_ - start);
    auto up = upper(word);
    for (auto keyword : kKeywords) {
      if (up == keyword) return Token{TokenKind::Keyword, std::move(up), start};
    }
    return Token{TokenKind::Identifier, std::string(word), start};
  }
  if (std::isdigit(c)) {
    while (pos_ < sql_.size() && std::isdigit(static_cast<unsigned char>(sql_[pos_]))) ++pos_;
    return Token{TokenKind::IntLiteral, std::string(sql_.substr(start, pos_ - start)), start};
  }
  if (is_symbol(c)) {
    ++pos_;
    return Token{TokenKind::Symbol, std::string(1, static_cast<char>(c)), start};
  }
  if (c == '?' && allow_placeholders_) {
    ++pos_;
    return Token{TokenKind::Placeholder, "?", start};
  }
  pos_ = sql_.size();
  throw SqlError(ErrorKind::IllegalCharacter, start,
                 c >= 0x20 && c < 0x7f ? std::string("illegal character '") +
                                             static_cast<char>(c) + "'"
                                       : "illegal byte " + std::to_string(c));
}

std::vector<Token> tokenize(std::string_view sql, bool allow_placeholders) {
  Lexer lexer(sql, allow_placeholders);
  std::vector<Token> tokens;
  while (auto token = lexer.next()) tokens.push_back(std::move(*token));
  return tokens;
}

std::vector<std::span<const Token>> split_statements(std::span<const Token> tokens) {
  std::vector<std::span<const Token>> slices;
  std::size_t begin = 0;
  for (std::size_t i = 0; i <= tokens.size(); ++i) {
    const bool at_end = i == tokens.size();
    if (at_end || (tokens[i].kind == TokenKind::Symbol && tokens[i].lexeme == ";")) {
      if (i > begin) slices.push_back(tokens.subspan(begin, i - begin));
      begin = i + 1;
    }
  }
  return slices;
}

}  // namespace seal::sql
