#pragma once

#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "seal/grade_service.hpp"

namespace seal::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitRejected = 2;
inline constexpr int kExitBlocked = 3;
inline constexpr int kExitAssertion = 4;
inline constexpr int kExitUsage = 64;

enum class Output { Plain, Trace };

struct CliConfig {
  grades::Mode mode = grades::Mode::Seal;
  std::optional<std::string> store_path;  // built-in seed when empty
  Output output = Output::Plain;
};

// Entry point behind the `seal` executable. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace seal::cli
