#include "seal/cases.hpp"

#include <algorithm>
#include <stdexcept>

#include "seal/delegator.hpp"

namespace seal::cases {

const std::vector<EvaluationCase>& evaluation_cases() {
  using threat::ThreatClass;
  static const std::vector<EvaluationCase> kCases{
      {1, "User1 benign injection", {"User1"}, Response::Kind::Denied, ThreatClass::Benign},
      {2, "User2 benign injection", {"User2"}, Response::Kind::Granted, ThreatClass::Benign},
      {3,
       "UPDATE-based malicious injection",
       {std::string(kTrustEscalationPayload)},
       Response::Kind::NotFound,
       ThreatClass::UpdateBased},
      {4,
       "ERROR-based malicious injection",
       {"' OR 1=1 --", "';--", "a=b"},
       Response::Kind::Obscured,
       ThreatClass::ErrorBased},
  };
  return kCases;
}

bool run_case(int number, grades::Mode mode, std::ostream& out) {
  const auto& all = evaluation_cases();
  auto it = std::ranges::find(all, number, &EvaluationCase::number);
  if (it == all.end()) throw std::out_of_range("no case " + std::to_string(number));

  out << "case " << it->number << ": " << it->title << " [" << grades::to_string(mode) << "]\n";
  bool passed = true;
  std::vector<std::string> messages;
  for (const auto& payload : it->payloads) {
    auto store = store::seed_default();
    const auto before = store.digest();
    const auto step = handle(payload, store, mode);
    const bool unchanged = store.digest() == before;

    out << "  inject \"" << payload << "\": " << to_string(step.response.kind) << " \""
        << step.response.message << "\" (threat "
        << (step.threat ? threat::to_string(*step.threat) : "-") << ", store "
        << (unchanged ? "unchanged" : "changed") << ")\n";

    if (step.response.kind != it->expected) {
      out << "  expected response " << to_string(it->expected) << '\n';
      passed = false;
    }
    if (step.threat != it->expected_threat) {
      out << "  expected threat " << threat::to_string(it->expected_threat) << '\n';
      passed = false;
    }
    if (!unchanged) {
      out << "  expected the store to be unchanged\n";
      passed = false;
    }
    messages.push_back(step.response.message);
  }
  if (std::ranges::adjacent_find(messages, std::not_equal_to<>{}) != messages.end()) {
    out << "  expected byte-identical responses\n";
    passed = false;
  }
  out << (passed ? "PASS" : "FAIL") << '\n';
  return passed;
}

}  // namespace seal::cases
