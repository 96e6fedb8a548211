#pragma once

// Command-line front end. Each command builds one JSON output document:
//   {"schema_version", "command", "algebra", "inputs", "result"}

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include "json.hpp"

namespace polyexp::cli {

inline constexpr const char* kSchemaVersion = "1.0";
inline constexpr double kBrionTolerance = 1e-9;

/// Raised when a --method all cross-check disagrees; carries the document so
/// it can still be printed.
struct CrossCheckFailure : std::runtime_error {
  CrossCheckFailure(const std::string& what, nlohmann::json doc)
      : std::runtime_error(what), document(std::move(doc)) {}
  nlohmann::json document;
};

nlohmann::json cmd_mults(const std::string& algebra, const std::string& weight,
                         std::optional<std::int64_t> height_bound = std::nullopt);
nlohmann::json cmd_polytope(const std::string& algebra, const std::string& weight);
nlohmann::json cmd_tensor(const std::string& algebra, const std::string& left, const std::string& right,
                          const std::string& method = "all");
nlohmann::json cmd_branch(const std::string& algebra, const std::string& embedding, const std::string& weight,
                          const std::string& method = "all");
nlohmann::json cmd_brion_check(const std::string& algebra, const std::string& weight, std::uint64_t seed = 1,
                               int samples = 20);

/// Human-readable rendering used by --pretty.
std::string render_pretty(const nlohmann::json& doc);

/// Parses argv and runs one command. Returns the process exit code:
/// 0 success, 1 cross-check failure, 2 usage or input error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace polyexp::cli
