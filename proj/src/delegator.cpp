#include "seal/delegator.hpp"

#include <algorithm>
#include <utility>

#include "seal/secure_strategies.hpp"

namespace seal {

std::variant<Payload, Response> validate_input(std::string_view raw,
                                               std::size_t sequence_index) {
  const bool printable = std::ranges::all_of(
      raw, [](unsigned char c) { return c >= 0x20 && c <= 0x7e; });
  if (raw.empty() || raw.size() > kMaxPayloadBytes || !printable) return Response::rejected();
  return Payload{std::string(raw), sequence_index};
}

std::string_view to_string(Stage stage) {
  switch (stage) {
    case Stage::Validation: return "validate";
    case Stage::Classification: return "classify";
    case Stage::FactoryCreation: return "factory";
    case Stage::Delegation: return "delegate";
    case Stage::ScriptExecution: return "execute";
  }
  return "unknown";
}

PipelineStep handle(std::string_view raw, store::SensitiveStore& store, Mode mode,
                    std::size_t sequence_index) {
  PipelineStep step;
  step.raw = std::string(raw);

  step.stages.push_back(Stage::Validation);
  auto validated = validate_input(raw, sequence_index);
  if (auto* rejection = std::get_if<Response>(&validated)) {
    step.response = std::move(*rejection);
    return step;
  }
  step.accepted = true;
  const auto& payload = std::get<Payload>(validated);

  if (mode == Mode::Vulnerable) {
    step.stages.push_back(Stage::ScriptExecution);
    auto check = grades::has_entergrades_vulnerable(store, payload.raw);
    step.script_report = check.report;
    step.response = std::move(check.response);
    return step;
  }

  const store::SensitiveStore& protected_store = store;

  step.stages.push_back(Stage::Classification);
  step.threat = threat::classify(payload);

  step.stages.push_back(Stage::FactoryCreation);
  const auto factory = strategy::make_factory(*step.threat);
  step.factory_tag = factory->tag();

  step.stages.push_back(Stage::Delegation);
  step.response = strategy::delegate_strategy(*factory, payload, protected_store);
  return step;
}

std::vector<std::string> describe(const PipelineStep& step) {
  std::vector<std::string> lines;
  for (auto stage : step.stages) {
    std::string line = "[" + std::string(to_string(stage)) + "] ";
    switch (stage) {
      case Stage::Validation:
        line += step.accepted ? "accepted" : "rejected";
        break;
      case Stage::Classification:
        line += step.threat ? std::string(threat::to_string(*step.threat)) : "-";
        break;
      case Stage::FactoryCreation:
        line += step.factory_tag ? std::string(threat::to_string(*step.factory_tag)) : "-";
        break;
      case Stage::Delegation:
        line += to_string(step.response.kind);
        break;
      case Stage::ScriptExecution:
        if (step.script_report) {
          line += "statements=" + std::to_string(step.script_report->statements_executed) +
                  " mutations=" + std::to_string(step.script_report->mutations_applied) +
                  " discarded=" + std::to_string(step.script_report->discarded_result_sets);
        }
        break;
    }
    lines.push_back(std::move(line));
  }
  return lines;
}

LateralScenario::LateralScenario(std::string name, std::vector<ScenarioStep> steps,
                                 std::string description)
    : name_(std::move(name)), description_(std::move(description)), steps_(std::move(steps)) {
  if (steps_.empty()) throw std::invalid_argument("lateral scenario needs at least one step");
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

LateralScenario parse_scenario(std::string_view text, std::string name) {
  std::vector<ScenarioStep> steps;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    auto line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (line.empty() || line.front() == '#') continue;

    constexpr std::string_view kStep = "step";
    if (!line.starts_with(kStep)) throw ScenarioParseError(line_no, "expected 'step'");
    line = trim(line.substr(kStep.size()));
    if (line.empty() || line.front() != '"') {
      throw ScenarioParseError(line_no, "expected quoted payload");
    }

    std::string payload;
    std::size_t i = 1;
    bool closed = false;
    for (; i < line.size(); ++i) {
      if (line[i] == '\\' && i + 1 < line.size() && line[i + 1] == '"') {
        payload += '"';
        ++i;
      } else if (line[i] == '"') {
        closed = true;
        ++i;
        break;
      } else {
        payload += line[i];
      }
    }
    if (!closed) throw ScenarioParseError(line_no, "unterminated payload");

    auto rest = trim(line.substr(i));
    constexpr std::string_view kExpect = "expect";
    if (!rest.starts_with(kExpect)) throw ScenarioParseError(line_no, "expected 'expect'");
    const auto kind_text = trim(rest.substr(kExpect.size()));
    const auto kind = parse_response_kind(kind_text);
    if (!kind || rest.size() == kExpect.size() || (rest[kExpect.size()] != ' ' &&
                                                   rest[kExpect.size()] != '\t')) {
      throw ScenarioParseError(line_no, "unknown response kind '" + std::string(kind_text) + "'");
    }
    steps.push_back({std::move(payload), *kind});
  }
  if (steps.empty()) throw ScenarioParseError(line_no, "scenario has no steps");
  return LateralScenario(std::move(name), std::move(steps));
}

bool LateralReport::passed() const noexcept {
  return std::ranges::all_of(outcomes, &StepOutcome::passed);
}

PipelineTrace LateralReport::trace() const {
  PipelineTrace trace;
  trace.reserve(outcomes.size());
  for (const auto& outcome : outcomes) trace.push_back(outcome.step);
  return trace;
}

LateralReport run_lateral(const LateralScenario& scenario, store::SensitiveStore& store,
                          Mode mode) {
  LateralReport report;
  std::size_t index = 0;
  for (const auto& planned : scenario.steps()) {
    auto step = handle(planned.payload, store, mode, index++);
    const bool passed = step.response.kind == planned.expected;
    report.outcomes.push_back({std::move(step), planned.expected, passed});
  }
  return report;
}

}  // namespace seal
