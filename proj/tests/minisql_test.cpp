#include <gtest/gtest.h>

#include <array>
#include <random>

#include "seal/minisql.hpp"
#include "test_support.hpp"

namespace seal::sql {
namespace {

using store::seed_default;
using store::TrustLevel;
using testing::kInterpolatedPayload;
using testing::kPayload;

constexpr std::string_view kTrustTemplate = "SELECT Trust FROM users WHERE Username = '%s'";
constexpr std::string_view kTrustQuery = "SELECT Trust FROM users WHERE Username = ?";

struct Expected {
  TokenKind kind;
  std::string lexeme;
};

void expect_tokens(const std::vector<Token>& actual, const std::vector<Expected>& expected) {
  ASSERT_EQ(actual.size(), expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    EXPECT_EQ(actual[i].kind, expected[i].kind) << "token " << i;
    EXPECT_EQ(actual[i].lexeme, expected[i].lexeme) << "token " << i;
  }
}

ErrorKind error_kind_of(auto&& fn) {
  try {
    fn();
  } catch (const SqlError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected SqlError";
  return ErrorKind::SyntaxError;
}

// Outcome of tokenize as a comparable value: tokens, or (kind, position).
std::variant<std::vector<Token>, std::pair<ErrorKind, std::size_t>> lex_outcome(
    std::string_view sql, bool placeholders = false) {
  try {
    return tokenize(sql, placeholders);
  } catch (const SqlError& e) {
    return std::pair{e.kind(), e.position()};
  }
}

TEST(Tokenize, CommentDropsRestOfLine) {
  const auto tokens = tokenize("SELECT 1; --");
  expect_tokens(tokens, {{TokenKind::Keyword, "SELECT"},
                         {TokenKind::IntLiteral, "1"},
                         {TokenKind::Symbol, ";"}});
  EXPECT_EQ(tokens[0].position, 0u);
  EXPECT_EQ(tokens[1].position, 7u);
  EXPECT_EQ(tokens[2].position, 8u);
}

TEST(Tokenize, CommentEndsAtNewline) {
  expect_tokens(tokenize("SELECT -- hidden\n1"),
                {{TokenKind::Keyword, "SELECT"}, {TokenKind::IntLiteral, "1"}});
}

TEST(Tokenize, EmptyInput) { EXPECT_TRUE(tokenize("").empty()); }

TEST(Tokenize, InterpolatedPayloadHandTokenized) {
  const auto tokens = tokenize(kInterpolatedPayload);
  expect_tokens(tokens, {
                            {TokenKind::Keyword, "SELECT"},
                            {TokenKind::Identifier, "Trust"},
                            {TokenKind::Keyword, "FROM"},
                            {TokenKind::Identifier, "users"},
                            {TokenKind::Keyword, "WHERE"},
                            {TokenKind::Identifier, "Username"},
                            {TokenKind::Symbol, "="},
                            {TokenKind::StringLiteral, ""},
                            {TokenKind::Symbol, ";"},
                            {TokenKind::Keyword, "UPDATE"},
                            {TokenKind::Identifier, "users"},
                            {TokenKind::Keyword, "SET"},
                            {TokenKind::Identifier, "Trust"},
                            {TokenKind::Symbol, "="},
                            {TokenKind::StringLiteral, "T2"},
                            {TokenKind::Keyword, "WHERE"},
                            {TokenKind::Identifier, "Username"},
                            {TokenKind::Symbol, "="},
                            {TokenKind::StringLiteral, "User1"},
                            {TokenKind::Symbol, ";"},
                            {TokenKind::Keyword, "SELECT"},
                            {TokenKind::IntLiteral, "1"},
                            {TokenKind::Symbol, ";"},
                        });
  // The empty literal sits where the template's quotes were.
  EXPECT_EQ(tokens[7].position, 41u);
}

TEST(Tokenize, RawPayloadHasOddQuoteCount) {
  // Five quotes: the payload only lexes cleanly once spliced after an open quote.
  EXPECT_EQ(std::ranges::count(kPayload, '\''), 5);
  Lexer lexer(kPayload, false);
  auto first = lexer.next();
  ASSERT_TRUE(first);
  EXPECT_EQ(first->kind, TokenKind::StringLiteral);
  EXPECT_EQ(first->lexeme, "; UPDATE users SET Trust = ");
  EXPECT_EQ(error_kind_of([] { tokenize(kPayload); }), ErrorKind::UnterminatedStringLiteral);
}

TEST(Tokenize, KeywordsCaseInsensitiveIdentifiersPreserved) {
  expect_tokens(tokenize("select Trust fRoM Users"), {{TokenKind::Keyword, "SELECT"},
                                                      {TokenKind::Identifier, "Trust"},
                                                      {TokenKind::Keyword, "FROM"},
                                                      {TokenKind::Identifier, "Users"}});
}

TEST(Tokenize, LiteralsHaveNoEscapes) {
  expect_tokens(tokenize("'it''s'"),
                {{TokenKind::StringLiteral, "it"}, {TokenKind::StringLiteral, "s"}});
  expect_tokens(tokenize("'a -- b; c'"), {{TokenKind::StringLiteral, "a -- b; c"}});
}

TEST(Tokenize, Errors) {
  EXPECT_EQ(error_kind_of([] { tokenize("SELECT 'x"); }), ErrorKind::UnterminatedStringLiteral);
  EXPECT_EQ(error_kind_of([] { tokenize("SELECT !"); }), ErrorKind::IllegalCharacter);
  EXPECT_EQ(error_kind_of([] { tokenize("a - b"); }), ErrorKind::IllegalCharacter);
  EXPECT_EQ(error_kind_of([] { tokenize("x = ?"); }), ErrorKind::IllegalCharacter);
  try {
    tokenize("SELECT 1 #");
    FAIL();
  } catch (const SqlError& e) {
    EXPECT_EQ(e.position(), 9u);
  }
}

TEST(Tokenize, PlaceholdersOnlyWhenAllowed) {
  const auto tokens = tokenize(kTrustQuery, true);
  EXPECT_EQ(tokens.back().kind, TokenKind::Placeholder);
  EXPECT_EQ(tokens.back().position, kTrustQuery.size() - 1);
  // Inside a literal `?` is just text.
  expect_tokens(tokenize("'?'"), {{TokenKind::StringLiteral, "?"}});
}

TEST(TokenizeProperty, TotalWithIncreasingPositions) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 3000; ++i) {
    const auto text = i % 2 ? testing::random_bytes(rng, 80) : testing::random_sqlish(rng, 12);
    const auto outcome = lex_outcome(text, i % 3 == 0);
    if (const auto* tokens = std::get_if<std::vector<Token>>(&outcome)) {
      for (std::size_t k = 1; k < tokens->size(); ++k) {
        ASSERT_LT((*tokens)[k - 1].position, (*tokens)[k].position) << text;
      }
      for (const auto& t : *tokens) ASSERT_LT(t.position, text.size());
    } else {
      ASSERT_LE(std::get<1>(outcome).second, text.size());
    }
  }
}

TEST(TokenizeProperty, CommentTruncation) {
  // Only meaningful when the prefix closes its literals, otherwise the dashes
  // are literal text and the tail may terminate the string.
  std::mt19937_64 rng(2);
  int checked = 0;
  for (int i = 0; i < 3000; ++i) {
    const auto prefix = testing::random_sqlish(rng, 8);
    if (!std::holds_alternative<std::vector<Token>>(lex_outcome(prefix))) continue;
    const auto tail = testing::random_printable(rng, 0, 30);
    ASSERT_EQ(lex_outcome(prefix + "--" + tail), lex_outcome(prefix + "--")) << prefix;
    ++checked;
  }
  EXPECT_GT(checked, 300);
}

TEST(TokenizeProperty, Deterministic) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 500; ++i) {
    const auto text = testing::random_sqlish(rng, 10);
    ASSERT_EQ(lex_outcome(text), lex_outcome(text));
  }
}

TEST(SplitStatements, Examples) {
  EXPECT_EQ(split_statements(tokenize("SELECT 1;")).size(), 1u);
  EXPECT_TRUE(split_statements({}).empty());
  EXPECT_EQ(split_statements(tokenize(";;SELECT 1;;")).size(), 1u);

  const auto tokens = tokenize(kInterpolatedPayload);
  const auto slices = split_statements(tokens);
  ASSERT_EQ(slices.size(), 3u);
  EXPECT_EQ(slices[0].size(), 8u);
  EXPECT_EQ(slices[1].front().lexeme, "UPDATE");
  EXPECT_EQ(slices[2].size(), 2u);
}

TEST(ParseStatement, Examples) {
  EXPECT_EQ(parse_statement(tokenize("SELECT Trust FROM users WHERE Username = 'User1'")),
            Statement(SelectColumn{"Trust", "users", {{"Username", std::string("User1")}}}));
  EXPECT_EQ(parse_statement(tokenize("SELECT 1")), Statement(SelectConst{1}));
  EXPECT_EQ(parse_statement(tokenize(
                "UPDATE users SET Trust = 'T2', Student = 'False' WHERE Username = 'User1' "
                "AND Trust = 'T1'")),
            Statement(Update{"users",
                             {{"Trust", std::string("T2")}, {"Student", std::string("False")}},
                             {{"Username", std::string("User1")}, {"Trust", std::string("T1")}}}));
}

TEST(ParseStatement, SyntaxErrors) {
  for (std::string_view bad :
       {"UPDATE users Trust", "SELECT Trust FROM users", "SELECT Trust users WHERE a = 'b'",
        "SELECT 1 2", "SELECT Trust FROM users WHERE Username =", "DELETE users",
        "SELECT Trust FROM users WHERE Username = 'a' OR 1 = 1", "SELECT 99999999999999999999",
        "UPDATE users SET WHERE a = 'b'"}) {
    EXPECT_EQ(error_kind_of([&] { parse_statement(tokenize(bad)); }), ErrorKind::SyntaxError)
        << bad;
  }
}

TEST(ParseStatement, PlaceholdersBecomeSlotsInOrder) {
  const auto statement =
      parse_statement(tokenize("SELECT Trust FROM users WHERE Username = ? AND Trust = ?", true));
  const auto& select = std::get<SelectColumn>(statement);
  EXPECT_EQ(select.predicates[0].value, ValueExpr(ParamSlot{0}));
  EXPECT_EQ(select.predicates[1].value, ValueExpr(ParamSlot{1}));
  EXPECT_EQ(count_param_slots(statement), 2u);
}

TEST(Interpolate, Examples) {
  EXPECT_EQ(interpolate(kTrustTemplate, "User1"),
            "SELECT Trust FROM users WHERE Username = 'User1'");
  EXPECT_EQ(interpolate(kTrustTemplate, kPayload), kInterpolatedPayload);
  EXPECT_EQ(split_statements(tokenize(interpolate(kTrustTemplate, kPayload))).size(), 3u);
  EXPECT_EQ(error_kind_of([] { interpolate("no placeholder", "x"); }), ErrorKind::BadTemplate);
  EXPECT_EQ(error_kind_of([] { interpolate("%s and %s", "x"); }), ErrorKind::BadTemplate);
  // The substituted value may itself contain %s.
  EXPECT_EQ(interpolate("<%s>", "%s"), "<%s>");
}

TEST(ExecuteScript, StackedPayloadEscalatesUser1) {
  auto s = seed_default();
  const auto report = execute_script(s, kInterpolatedPayload);
  EXPECT_EQ(report, (ExecutionReport{3, 1, 2}));
  EXPECT_EQ(s.get_user("User1")->trust, TrustLevel::T2);
  EXPECT_EQ(s.list_user_privileges(),
            (Rows{{"User1", "Enter Grades"}, {"User2", "Enter Grades"}}));
}

TEST(ExecuteScript, SelectConstLeavesStore) {
  auto s = seed_default();
  EXPECT_EQ(execute_script(s, "SELECT 1"), (ExecutionReport{1, 0, 1}));
  EXPECT_EQ(s, seed_default());
}

TEST(ExecuteScript, UpdateDemotesUser2) {
  // Hand-applied: only User2 matches, its Trust cell becomes T1.
  auto s = seed_default();
  const auto report = execute_script(s, "UPDATE users SET Trust = 'T1' WHERE Username = 'User2'");
  EXPECT_EQ(report.mutations_applied, 1u);
  EXPECT_EQ(s.get_user("User2")->trust, TrustLevel::T1);
  EXPECT_EQ(s.get_user("User1")->trust, TrustLevel::T1);
  EXPECT_TRUE(s.get_user("User2")->faculty);
}

TEST(ExecuteScript, ErrorKeepsEarlierMutations) {
  auto s = seed_default();
  ExecutionReport report;
  EXPECT_THROW(execute_script(s,
                              "UPDATE users SET Trust = 'T2' WHERE Username = 'User1'; "
                              "SELECT 1; 'dangling",
                              report),
               SqlError);
  EXPECT_EQ(report, (ExecutionReport{2, 1, 1}));
  EXPECT_EQ(s.get_user("User1")->trust, TrustLevel::T2);

  // A statement after the error never runs.
  auto t = seed_default();
  EXPECT_THROW(execute_script(t, "SELECT 1 2; UPDATE users SET Trust = 'T2' WHERE Username = "
                                 "'User1'"),
               SqlError);
  EXPECT_EQ(t, seed_default());
}

TEST(ExecuteScript, SchemaErrors) {
  auto s = seed_default();
  EXPECT_EQ(error_kind_of([&] { execute_script(s, "SELECT a FROM grades WHERE b = 'c'"); }),
            ErrorKind::UnknownTable);
  EXPECT_EQ(error_kind_of([&] { execute_script(s, "SELECT Password FROM users WHERE b = 'c'"); }),
            ErrorKind::UnknownColumn);
}

TEST(ExecuteScript, UpdatesAreAtomicAndValidated) {
  auto s = seed_default();
  // Renaming User1 to User2 would duplicate a username.
  EXPECT_THROW(execute_script(s, "UPDATE users SET Username = 'User2' WHERE Username = 'User1'"),
               store::StoreError);
  EXPECT_THROW(execute_script(s, "UPDATE users SET Trust = 'T9' WHERE Username = 'User1'"),
               store::StoreError);
  EXPECT_THROW(execute_script(s, "UPDATE users SET Student = 'False' WHERE Username = 'User1'"),
               store::StoreError);
  EXPECT_EQ(s, seed_default());

  // Flipping both role flags together keeps student XOR faculty.
  execute_script(s, "UPDATE users SET Student = 'False', Faculty = 'True' WHERE Username = 'User1'");
  EXPECT_TRUE(s.get_user("User1")->faculty);
}

TEST(ExecuteParameterized, Examples) {
  const auto s = seed_default();
  const std::array<std::string, 1> user2{"User2"};
  EXPECT_EQ(execute_parameterized(s, kTrustQuery, user2), (Rows{{"T2"}}));

  const std::array<std::string, 1> payload{std::string(kPayload)};
  EXPECT_TRUE(execute_parameterized(s, kTrustQuery, payload).empty());

  EXPECT_EQ(error_kind_of([&] { execute_parameterized(s, "SELECT 1; SELECT 1", {}); }),
            ErrorKind::MultipleStatements);
  EXPECT_EQ(error_kind_of([&] { execute_parameterized(s, kTrustQuery, {}); }),
            ErrorKind::ArityMismatch);
  EXPECT_EQ(error_kind_of([&] {
              execute_parameterized(s, "UPDATE users SET Trust = ? WHERE Username = 'User1'",
                                    user2);
            }),
            ErrorKind::MutationRefused);
}

TEST(ExecuteParameterized, LowercaseColumnResolves) {
  const auto s = seed_default();
  const std::array<std::string, 1> user1{"User1"};
  EXPECT_EQ(execute_parameterized(s, "SELECT Trust FROM users WHERE username = ?", user1),
            (Rows{{"T1"}}));
  // Values still compare case-sensitively.
  const std::array<std::string, 1> lower{"user1"};
  EXPECT_TRUE(execute_parameterized(s, kTrustQuery, lower).empty());
}

TEST(ExecuteParameterizedProperty, OneStatementNoMutation) {
  const auto prepared = PreparedStatement::prepare(kTrustQuery);
  ASSERT_EQ(prepared.parameter_count(), 1u);
  const auto s = seed_default();
  const auto before = s.digest();
  for (const auto& param : testing::adversarial_params(2000, 4)) {
    const std::array<std::string, 1> params{param};
    const auto bound = prepared.bind(params);
    const auto* select = std::get_if<SelectColumn>(&bound);
    ASSERT_NE(select, nullptr);
    ASSERT_EQ(count_param_slots(bound), 0u);
    ASSERT_EQ(select->predicates.at(0).value, ValueExpr(param));
    const auto rows = execute_parameterized(s, kTrustQuery, params);
    ASSERT_LE(rows.size(), 1u);
    ASSERT_EQ(s.digest(), before);
  }
}

TEST(ExecuteProperty, ScriptAndParameterizedDiverge) {
  auto scripted = seed_default();
  execute_script(scripted, interpolate(kTrustTemplate, kPayload));
  EXPECT_NE(scripted.digest(), seed_default().digest());

  const auto parameterized = seed_default();
  const std::array<std::string, 1> params{std::string(kPayload)};
  execute_parameterized(parameterized, kTrustQuery, params);
  EXPECT_EQ(parameterized.digest(), seed_default().digest());
}

TEST(ExecuteProperty, DeterministicReports) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 500; ++i) {
    const auto sql = interpolate(kTrustTemplate, testing::random_sqlish(rng, 10));
    auto a = seed_default();
    auto b = seed_default();
    ExecutionReport ra, rb;
    std::string ea, eb;
    try { execute_script(a, sql, ra); } catch (const std::exception& e) { ea = e.what(); }
    try { execute_script(b, sql, rb); } catch (const std::exception& e) { eb = e.what(); }
    ASSERT_EQ(ra, rb);
    ASSERT_EQ(ea, eb);
    ASSERT_EQ(a, b);
    ASSERT_GE(ra.statements_executed, ra.mutations_applied);
  }
}

TEST(Query, SingleReadOnlyStatement) {
  const auto s = seed_default();
  EXPECT_EQ(query(s, "SELECT Privilege FROM authorization WHERE Trust = 'T1'"),
            (Rows{{"View Grades"}}));
  EXPECT_EQ(error_kind_of([&] { query(s, "SELECT 1; SELECT 1"); }),
            ErrorKind::MultipleStatements);
  EXPECT_EQ(error_kind_of([&] { query(s, "UPDATE users SET Trust = 'T2' WHERE Trust = 'T1'"); }),
            ErrorKind::MutationRefused);
}

}  // namespace
}  // namespace seal::sql
