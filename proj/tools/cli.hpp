#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sepnoether/arith.hpp"

namespace sepnoether::cli {

enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kParse = 2,
  kCap = 3,
  kInvalidInput = 4,
  kMismatch = 5,
};

enum class OutputFormat { Plain, Json, Csv };

struct RunConfig {
  std::string group;
  std::optional<std::string> elements;
  std::optional<std::string> vector;
  std::optional<Int> max_len;
  int workers = 1;
  bool symmetry = false;
  bool audit = false;
  OutputFormat output = OutputFormat::Plain;
  std::optional<std::string> cache_dir;
  std::uint64_t node_cap = 100'000'000;
  std::optional<std::string> batch;
  bool davenport = false;
  bool refute_scaling = false;
  std::optional<Int> prime;
  bool no_sweep = false;
};

/// Entry point shared by the executable and the tests. Never throws; maps
/// failures onto ExitCode values.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sepnoether::cli
