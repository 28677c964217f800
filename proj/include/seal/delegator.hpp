#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "seal/grade_service.hpp"
#include "seal/minisql.hpp"
#include "seal/response.hpp"
#include "seal/sensitive_store.hpp"
#include "seal/threat_detection.hpp"

namespace seal {

using grades::Mode;
using threat::Payload;
using threat::ThreatClass;

inline constexpr std::size_t kMaxPayloadBytes = 1024;

// Accepts non-empty input of at most kMaxPayloadBytes printable ASCII bytes
// (0x20-0x7E); everything else is rejected with "Invalid input".
std::variant<Payload, Response> validate_input(std::string_view raw,
                                               std::size_t sequence_index = 0);

enum class Stage { Validation, Classification, FactoryCreation, Delegation, ScriptExecution };

std::string_view to_string(Stage stage);

/// What happened to one request on its way through the pipeline.
struct PipelineStep {
  std::string raw;
  bool accepted = false;
  std::optional<ThreatClass> threat;
  std::optional<ThreatClass> factory_tag;
  std::optional<sql::ExecutionReport> script_report;  // vulnerable mode only
  std::vector<Stage> stages;                           // in the order they ran
  Response response;
};

using PipelineTrace = std::vector<PipelineStep>;

/**
 * Serves one request from the injection surface.
 *
 * Seal mode: validate, classify, build the factory, delegate. The store is
 * only ever handed on as const. Vulnerable mode: validate, then the
 * interpolating faculty check runs directly against the store.
 */
PipelineStep handle(std::string_view raw, store::SensitiveStore& store, Mode mode,
                    std::size_t sequence_index = 0);

// One line per stage, e.g. "[classify] UpdateBased".
std::vector<std::string> describe(const PipelineStep& step);

struct ScenarioStep {
  std::string payload;
  Response::Kind expected;

  bool operator==(const ScenarioStep&) const = default;
};

class LateralScenario {
 public:
  // Throws std::invalid_argument when `steps` is empty.
  LateralScenario(std::string name, std::vector<ScenarioStep> steps,
                  std::string description = {});

  const std::string& name() const noexcept { return name_; }
  const std::string& description() const noexcept { return description_; }
  const std::vector<ScenarioStep>& steps() const noexcept { return steps_; }

 private:
  std::string name_;
  std::string description_;
  std::vector<ScenarioStep> steps_;
};

class ScenarioParseError : public std::runtime_error {
 public:
  ScenarioParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/**
 * Scenario files hold one step per line:
 *
 *     step "<payload>" expect <granted|denied|notfound|obscured|rejected>
 *
 * `\"` inside the payload stands for a quote; any other backslash is
 * literal. Blank lines and `#` comments are ignored.
 */
LateralScenario parse_scenario(std::string_view text, std::string name);

struct StepOutcome {
  PipelineStep step;
  Response::Kind expected;
  bool passed;
};

struct LateralReport {
  std::vector<StepOutcome> outcomes;

  bool passed() const noexcept;
  PipelineTrace trace() const;
};

// Steps share `store`, so whatever an earlier step persists is visible to the
// later ones.
LateralReport run_lateral(const LateralScenario& scenario, store::SensitiveStore& store,
                          Mode mode);

}  // namespace seal
