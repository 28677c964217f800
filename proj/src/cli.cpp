#include "seal/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "seal/cases.hpp"
#include "seal/delegator.hpp"
#include "seal/sensitive_store.hpp"

namespace seal::cli {

namespace {

class CommandError : public std::runtime_error {
 public:
  CommandError(int code, const std::string& what) : std::runtime_error(what), code_(code) {}
  int code() const noexcept { return code_; }

 private:
  int code_;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CommandError(kExitError, "cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out || !(out << contents) || !out.flush()) {
    throw CommandError(kExitError, "cannot write '" + path + "'");
  }
}

store::SensitiveStore load_store(const CliConfig& config) {
  if (!config.store_path) return store::seed_default();
  try {
    return store::load_seed(read_file(*config.store_path));
  } catch (const store::StoreError& e) {
    throw CommandError(kExitError, *config.store_path + ": " + e.what());
  }
}

// Vulnerable mode writes the (possibly exploited) store back so later
// invocations observe it.
void persist_if_vulnerable(const CliConfig& config, const store::SensitiveStore& store) {
  if (config.mode == grades::Mode::Vulnerable && config.store_path) {
    write_file(*config.store_path, store::save_seed(store));
  }
}

int exit_code_for(const Response& response) {
  switch (response.kind) {
    case Response::Kind::Granted:
    case Response::Kind::Denied: return kExitOk;
    case Response::Kind::ValidationRejected: return kExitRejected;
    case Response::Kind::NotFound:
    case Response::Kind::Obscured: return kExitBlocked;
  }
  return kExitError;
}

void print_step(const CliConfig& config, const PipelineStep& step, std::ostream& out) {
  if (config.output == Output::Trace) {
    for (const auto& line : describe(step)) out << line << '\n';
  }
  out << step.response.message << '\n';
}

int cmd_seed(const CliConfig& config) {
  if (!config.store_path) throw CommandError(kExitUsage, "seed requires --store <path>");
  write_file(*config.store_path, store::save_seed(store::seed_default()));
  return kExitOk;
}

int cmd_inject(const CliConfig& config, const std::string& payload, std::ostream& out) {
  auto store = load_store(config);
  const auto step = handle(payload, store, config.mode);
  print_step(config, step, out);
  persist_if_vulnerable(config, store);
  return exit_code_for(step.response);
}

int cmd_run_case(const CliConfig& config, int number, std::ostream& out) {
  return cases::run_case(number, config.mode, out) ? kExitOk : kExitAssertion;
}

int cmd_run_lateral(const CliConfig& config, const std::string& scenario_path,
                    std::ostream& out) {
  const auto text = read_file(scenario_path);
  std::optional<LateralScenario> scenario;
  try {
    scenario.emplace(
        parse_scenario(text, std::filesystem::path(scenario_path).stem().string()));
  } catch (const ScenarioParseError& e) {
    throw CommandError(kExitError, scenario_path + ": " + e.what());
  }
  auto store = load_store(config);
  const auto report = run_lateral(*scenario, store, config.mode);

  out << "scenario " << scenario->name() << " [" << grades::to_string(config.mode) << "]\n";
  std::size_t index = 1;
  for (const auto& outcome : report.outcomes) {
    if (config.output == Output::Trace) {
      for (const auto& line : describe(outcome.step)) out << "  " << line << '\n';
    }
    out << "step " << index++ << ": expected " << to_string(outcome.expected) << ", actual "
        << to_string(outcome.step.response.kind) << " \"" << outcome.step.response.message
        << "\" " << (outcome.passed ? "PASS" : "FAIL") << '\n';
  }
  out << (report.passed() ? "PASS" : "FAIL") << '\n';
  persist_if_vulnerable(config, store);
  return report.passed() ? kExitOk : kExitAssertion;
}

int cmd_dump(const CliConfig& config, std::ostream& out) {
  const auto store = load_store(config);
  try {
    for (const auto& row : store.list_user_privileges()) out << render_row(row) << '\n';
  } catch (const store::StoreError& e) {
    throw CommandError(kExitError, e.what());
  }
  return kExitOk;
}

int cmd_repl(const CliConfig& config, std::istream& in, std::ostream& out) {
  auto store = load_store(config);
  std::string line;
  std::size_t index = 0;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    print_step(config, handle(line, store, config.mode, index++), out);
  }
  persist_if_vulnerable(config, store);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Injection harness for the SEAL delegation pipeline", "seal"};
  app.fallthrough();
  app.require_subcommand(1);

  CliConfig config;
  std::string store_path;
  bool trace = false;
  std::string mode = "seal";
  app.add_option("--mode", mode, "Request handling mode: seal or vulnerable")
      ->transform(CLI::IsMember({"seal", "vulnerable"}, CLI::ignore_case))
      ->capture_default_str();
  app.add_option("--store", store_path, "Seed file backing the store");
  app.add_flag("--trace", trace, "Print one line per pipeline stage");

  auto* seed = app.add_subcommand("seed", "Write the default seed file to --store");
  std::string payload;
  auto* inject = app.add_subcommand("inject", "Inject one payload");
  inject->add_option("payload", payload, "Text to inject")->required();
  int case_number = 0;
  auto* run_case = app.add_subcommand("run-case", "Replay evaluation case 1-4 on a fresh seed");
  run_case->add_option("n", case_number, "Case number")->required()->check(CLI::Range(1, 4));
  std::string scenario_path;
  auto* run_lateral = app.add_subcommand("run-lateral", "Replay a lateral scenario file");
  run_lateral->add_option("scenario", scenario_path, "Scenario file")->required();
  auto* dump = app.add_subcommand("dump", "Print the user privilege report");
  auto* repl = app.add_subcommand("repl", "Inject payloads read line by line from stdin");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  config.mode = mode == "vulnerable" ? grades::Mode::Vulnerable : grades::Mode::Seal;
  if (!store_path.empty()) config.store_path = store_path;
  config.output = trace ? Output::Trace : Output::Plain;

  try {
    if (*seed) return cmd_seed(config);
    if (*inject) return cmd_inject(config, payload, out);
    if (*run_case) return cmd_run_case(config, case_number, out);
    if (*run_lateral) return cmd_run_lateral(config, scenario_path, out);
    if (*dump) return cmd_dump(config, out);
    if (*repl) return cmd_repl(config, in, out);
  } catch (const CommandError& e) {
    err << "error: " << e.what() << '\n';
    return e.code();
  }
  return kExitUsage;
}

}  // namespace seal::cli
