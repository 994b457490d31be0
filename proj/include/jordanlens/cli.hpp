#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace jordanlens::cli {

enum class Command {
  Angles,
  Decompose,
  Frames,
  Equiv,
  SwapUnitary,
  Spectrum,
  NumrangeSum,
  NumrangeProduct,
  Verify,
  RandomPair,
};

enum class Format { Text, Csv, Svg, Json };

struct RunConfig {
  Command command = Command::Angles;
  std::vector<std::string> inputs;  // command-specific arity
  double tol = 1e-8;
  int samples = 720;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> output;
  Format format = Format::Text;
  bool degrees = false;
  std::string kind = "PQ";      // spectrum operator
  std::vector<double> angles;   // random-pair interior angles
  int a = 0, b = 0, c = 0, d = 0;  // random-pair trivial block counts
  int corpus = 0;               // verify: number of synthesized pairs
};

/// Dispatches one command. Exit status: 0 success, 1 verification or
/// equivalence failure, 2 parse/usage error.
int run(const RunConfig& config);

/// Parses argv (the `jordanlens` command line) and dispatches.
int run(int argc, const char* const* argv);

}  // namespace jordanlens::cli
