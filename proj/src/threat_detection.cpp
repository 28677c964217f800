#include "seal/threat_detection.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace seal::threat {

namespace {

constexpr std::array<std::string_view, 4> kErrorKeywords{"SELECT", "UNION", "OR", "AND"};
constexpr std::array<std::string_view, 4> kMetaSequences{"'", ";", "--", "="};

bool is_word_char(unsigned char c) { return std::isalnum(c) || c == '_'; }

bool contains_word(std::string_view text, std::string_view word) {
  std::size_t i = 0;
  while (i < text.size()) {
    if (!is_word_char(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    std::size_t end = i;
    while (end < text.size() && is_word_char(static_cast<unsigned char>(text[end]))) ++end;
    const auto candidate = text.substr(i, end - i);
    const bool equal = std::ranges::equal(candidate, word, [](unsigned char a, unsigned char b) {
      return std::toupper(a) == std::toupper(b);
    });
    if (equal) return true;
    i = end;
  }
  return false;
}

bool any_fragment_has_word(const std::vector<Fragment>& fragments, std::string_view word) {
  return std::ranges::any_of(fragments,
                             [&](const Fragment& f) { return contains_word(f.text, word); });
}

}  // namespace

std::string_view to_string(ThreatClass threat) {
  switch (threat) {
    case ThreatClass::Benign: return "Benign";
    case ThreatClass::UpdateBased: return "UpdateBased";
    case ThreatClass::ErrorBased: return "ErrorBased";
  }
  return "Unknown";
}

std::optional<ThreatClass> parse_threat_class(std::string_view text) {
  for (auto threat : {ThreatClass::Benign, ThreatClass::UpdateBased, ThreatClass::ErrorBased}) {
    if (to_string(threat) == text) return threat;
  }
  return std::nullopt;
}

std::vector<Fragment> scan_outside_literals(std::string_view raw, LiteralContext start) {
  std::vector<Fragment> fragments;
  bool inside = start == LiteralContext::Inside;
  std::size_t begin = 0;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i] != '\'') continue;
    if (!inside) fragments.push_back({std::string(raw.substr(begin, i - begin)), begin});
    inside = !inside;
    begin = i + 1;
  }
  if (!inside) fragments.push_back({std::string(raw.substr(begin)), begin});
  return fragments;
}

bool matches_benign_grammar(std::string_view raw) {
  return !raw.empty() &&
         std::ranges::all_of(raw, [](unsigned char c) { return is_word_char(c); });
}

ThreatClass classify(const Payload& payload) {
  const std::string_view raw = payload.raw;
  const auto standalone = scan_outside_literals(raw, LiteralContext::Outside);
  const auto spliced = scan_outside_literals(raw, LiteralContext::Inside);

  if (any_fragment_has_word(standalone, "UPDATE") || any_fragment_has_word(spliced, "UPDATE")) {
    return ThreatClass::UpdateBased;
  }

  if (!matches_benign_grammar(raw)) return ThreatClass::ErrorBased;
  for (const auto& fragment : standalone) {
    for (auto meta : kMetaSequences) {
      if (fragment.text.find(meta) != std::string::npos) return ThreatClass::ErrorBased;
    }
  }
  for (auto keyword : kErrorKeywords) {
    if (any_fragment_has_word(standalone, keyword)) return ThreatClass::ErrorBased;
  }
  return ThreatClass::Benign;
}

}  // namespace seal::threat
