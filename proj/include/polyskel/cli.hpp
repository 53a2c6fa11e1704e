#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace polyskel::cli {

enum ExitCode : int {
  kVerified = 0,
  kVerdictFailure = 1,
  kInputError = 2,
  kNotPerfect = 3,
};

enum class InstanceKind { posets, graphs };

struct RunConfig {
  std::string command;
  std::string input_path;
  std::uint64_t seed = 0;
  std::size_t max_d = 4;
  std::size_t max_n = 5;
  std::size_t sample = 0;
  // Sizes above this are sampled (when sample > 0) instead of enumerated.
  std::size_t exhaustive_up_to = 0;  // 0: 4 for posets, 5 for graphs
  InstanceKind kind = InstanceKind::posets;
  bool verify_oracle = true;
  bool unchecked = false;
  bool json = false;
};

int cmd_order(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_stab(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_chain_polytope(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_sweep(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_random(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses arguments (without the program name) and dispatches.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polyskel::cli
