#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "coloop/exactalg/ring.hpp"
#include "coloop/homalg/words.hpp"

namespace coloop::cli {

enum class OutputFormat { table, json };

// Exit codes.
constexpr int exit_ok = 0;
constexpr int exit_invalid = 2;
constexpr int exit_identity_failure = 3;
constexpr int exit_uncertified = 4;

struct JobConfig {
  std::string command;  // loops, equivariant, cyclic, polytope, verify, info
  std::string input;    // builtin URI or JSON path
  RingSpec ring = RingSpec::integers();
  int lo = 0;
  int hi = 6;
  WordCap word_cap;
  int u_truncation = 4;
  OutputFormat format = OutputFormat::table;
  bool allow_truncated = false;

  std::string variant = "positive";  // cyclic
  std::string side = "cohoch";       // cyclic: cohoch or hoch
  std::string family;                // polytope: freehedron or goodwillie
  int n = 0;                         // polytope dimension
  bool faces = false, counts = false, poset = false;

  // Throws ValidationError for windows or caps out of range.
  void validate() const;
};

// A finished command: the JSON document, its table rendering and the exit code.
struct CommandOutput {
  nlohmann::json doc;
  std::string table;
  int exit_code = exit_ok;
  std::string error;  // printed to stderr when nonempty
};

CommandOutput cmd_loops(const JobConfig& cfg);
CommandOutput cmd_equivariant(const JobConfig& cfg);
CommandOutput cmd_cyclic(const JobConfig& cfg);
CommandOutput cmd_polytope(const JobConfig& cfg);
CommandOutput cmd_verify(const JobConfig& cfg);
CommandOutput cmd_info(const JobConfig& cfg);

// Parses argv, runs the command and writes to out/err; returns the exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace coloop::cli
