#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "symvar/divisor_theory.hpp"

namespace symvar {

struct Workspace {
  SymmetricSpaceData space;
  std::map<std::string, ColoredFan> fans;
  std::map<std::string, BDivisor> divisors;
  bool operator==(const Workspace& o) const;
};

/// Every violation found while reading a workspace, one line each.
class WorkspaceError : public InputError {
 public:
  explicit WorkspaceError(std::vector<std::string> issues);
  const std::vector<std::string>& issues() const { return issues_; }

 private:
  std::vector<std::string> issues_;
};

struct ParseOptions {
  std::size_t max_rank = 4;
};

/// Parses and validates. Throws WorkspaceError.
Workspace parse_workspace_text(const std::string& text, const ParseOptions& opts = {});
Workspace parse_workspace(const std::string& path, const ParseOptions& opts = {});
std::string serialize_workspace(const Workspace& ws);

struct CommandOptions {
  std::uint64_t seed = 1;
  std::size_t max_rank = 4;
  bool integral = false;  ///< classify: require D Cartier
};

struct CommandOutcome {
  int exit_code = 0;   ///< 0 ok, 1 input error, 2 precondition failure, 3 internal error
  std::string report;  ///< JSON envelope
};

/// Reads the workspace bytes, runs one command, never throws.
CommandOutcome run_command(const std::string& workspace_text, const std::string& command,
                           const std::vector<std::string>& args, const CommandOptions& opts = {});

std::vector<std::string> command_names();
std::vector<std::string> oracle_suite_names();

}  // namespace symvar
