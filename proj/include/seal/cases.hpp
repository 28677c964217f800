#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "seal/grade_service.hpp"
#include "seal/response.hpp"
#include "seal/threat_detection.hpp"

namespace seal::cases {

// Stacked-statement payload that closes the quoted username, promotes User1
// to T2, and comments out the template's closing quote.
inline constexpr std::string_view kTrustEscalationPayload =
    "'; UPDATE users SET Trust = 'T2' WHERE Username = 'User1'; SELECT 1; --";

/// One evaluation case: every payload is injected into a fresh default seed.
struct EvaluationCase {
  int number;
  std::string title;
  std::vector<std::string> payloads;
  Response::Kind expected;
  threat::ThreatClass expected_threat;
};

const std::vector<EvaluationCase>& evaluation_cases();

/**
 * Runs case `number` (1-4) under `mode` and writes a per-payload line plus a
 * final PASS or FAIL line. A case passes when every payload yields the
 * expected response kind and threat class, leaves the store digest unchanged,
 * and (for multi-payload cases) all responses are byte-identical.
 * Throws std::out_of_range for an unknown case number.
 */
bool run_case(int number, grades::Mode mode, std::ostream& out);

}  // namespace seal::cases
