#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "affvoa/root_datum.hpp"
#include "affvoa/vertex_state.hpp"

namespace affvoa {

struct RunConfig {
  RootType type = RootType::D;
  int rank = 4;
  int n = 1;
  bool b_vector = false;
  std::vector<std::string> states;  // custom vectors
  std::optional<Rational> level;    // unset: symbolic
  std::string ideal = "v";          // v | triality
  int max_degree = 2;
  std::string format = "text";      // text | json
  std::optional<std::string> cache_dir;
  std::optional<Rational> expect_level;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

struct CommandResult {
  int exit_code = kExitOk;
  std::string out;
  std::string err;
};

/// Thrown for invalid configurations; mapped to exit code 2.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

void validate(const RunConfig& cfg);

/// Builds the root datum, reading and writing the structure-constant table
/// under cfg.cache_dir when set.
RootDatumPtr load_datum(const RunConfig& cfg);
std::string cache_file_name(RootType type, int rank);

/// The candidate vector: the first --state, the B-type vector, or v_n.
SymbolicState candidate_vector(const RunConfig& cfg, const RootDatumPtr& d);
/// Generators of the selected ideal.
std::vector<SymbolicState> ideal_generators(const RunConfig& cfg, const RootDatumPtr& d);

CommandResult cmd_verify(const RunConfig& cfg);
CommandResult cmd_zhu(const RunConfig& cfg);
CommandResult cmd_classify(const RunConfig& cfg);
CommandResult cmd_search(const RunConfig& cfg);
CommandResult cmd_report(const RunConfig& cfg);

/// Dispatches by name ("verify", ...), turning exceptions into exit codes.
CommandResult run_command(const std::string& name, const RunConfig& cfg);

}  // namespace affvoa
