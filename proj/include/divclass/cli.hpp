#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "divclass/int_matrix.hpp"
#include "divclass/sweep.hpp"

namespace divclass::cli {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kToolName = "divclass";
inline constexpr std::string_view kVersion = "1.0.0";

enum class OutputFormat { json, text };

/// Exit codes: 0 success, 1 input error, 2 internal invariant violation.
enum ExitCode : int { kSuccess = 0, kInputError = 1, kInternalError = 2 };

struct CommandResult {
  int exit_code = kSuccess;
  std::string out;
  std::string err;
};

/// Parsed input document. Exactly one mode's fields are populated.
struct InputDocument {
  enum class Mode { poset, cone };
  Mode mode = Mode::poset;
  PosetInput poset;
  std::size_t dim = 0;
  std::vector<IntVector> forms;
  std::optional<IntVector> interior_point;
};

/// Throws InputError on schema violations. Integers may be JSON numbers or
/// decimal strings.
InputDocument parse_input(const Json& doc);
/// Canonical JSON form; integers are written as decimal strings.
Json to_json(const InputDocument& doc);

CommandResult cmd_analyze(std::string_view document, OutputFormat format);

struct FamilyRequest {
  std::string name;  // two-chains | veronese | segre | determinantal
  std::optional<long> a, b, n, r, m, p, q;
};

CommandResult cmd_family(const FamilyRequest& request, OutputFormat format);

CommandResult cmd_sweep(const SweepConfig& config, OutputFormat format);

}  // namespace divclass::cli
