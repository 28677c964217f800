#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace seal::threat {

enum class ThreatClass { Benign, UpdateBased, ErrorBased };

std::string_view to_string(ThreatClass threat);
std::optional<ThreatClass> parse_threat_class(std::string_view text);

struct Payload {
  std::string raw;
  // Position within a lateral scenario; 0 for a standalone request.
  std::size_t sequence_index = 0;
};

struct Fragment {
  std::string text;
  std::size_t position;

  bool operator==(const Fragment&) const = default;
};

// Where scanning starts relative to a single-quoted literal. Injected text
// lands inside `'...'` in the vulnerable query, so from the database's point
// of view the payload's first quote closes a literal rather than opening one.
enum class LiteralContext { Outside, Inside };

/**
 * Returns the spans of `raw` that lie outside single-quoted literals, using
 * the same quoting rules as the SQL lexer (no escapes). One fragment precedes
 * the first opening quote and one follows each closing quote, so empty
 * fragments are kept. A quote left open runs to the end of the input.
 */
std::vector<Fragment> scan_outside_literals(std::string_view raw,
                                            LiteralContext start = LiteralContext::Outside);

/**
 * Rule table, first match wins:
 *
 *   R1  UPDATE appears as a word outside literals, scanning either as
 *       standalone text or as text spliced into a quoted literal
 *       -> UpdateBased
 *   R2  raw is not `[A-Za-z0-9_]+`, or contains `'`, `;`, `--`, `=` or one
 *       of SELECT, UNION, OR, AND outside literals -> ErrorBased
 *   R3  otherwise -> Benign
 *
 * Keywords match case-insensitively on word boundaries. Only the payload text
 * is inspected; `sequence_index` does not affect the result.
 */
ThreatClass classify(const Payload& payload);

bool matches_benign_grammar(std::string_view raw);

}  // namespace seal::threat
