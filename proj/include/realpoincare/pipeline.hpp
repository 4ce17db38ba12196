#pragma once

// Command orchestration. Every command produces a JSON document; the text report
// is rendered from the same document.

#include <optional>
#include <string>

#include <json.hpp>

#include "realpoincare/branch.hpp"
#include "realpoincare/oracle.hpp"

namespace realpoincare {

enum class Which { s, classical, real, all };

struct RunOptions {
  std::optional<long> order;      ///< series expansion order
  std::optional<long> max_order;  ///< verify range
  Which which = Which::all;
  long size_cap = kDefaultSizeCap;
};

namespace exit_code {
constexpr int ok = 0;
constexpr int usage = 1;
constexpr int parse = 2;
constexpr int domain = 3;
constexpr int mismatch = 4;
constexpr int resource = 5;
}  // namespace exit_code

struct Outcome {
  nlohmann::json doc;
  int code = exit_code::ok;
};

Outcome cmd_analyze(const InputFile& in, const RunOptions& opt);
Outcome cmd_series(const InputFile& in, const RunOptions& opt);
Outcome cmd_verify(const InputFile& in, const RunOptions& opt);
Outcome cmd_conjugate(const InputFile& in, const RunOptions& opt);

}  // namespace realpoincare
