#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "vcwl/veronese.hpp"

namespace vcwl {

enum class OutputFormat { Table, Records };

struct JobSpec {
  std::string command;
  int n = 2;
  int c = 2;
  std::optional<std::string> ideal_text;
  std::optional<std::string> ideal_file;
  int imax = 2;
  std::optional<int> jmax;
  std::uint64_t seed = 0;
  long bound = kDefaultBound;
  OutputFormat format = OutputFormat::Table;
  bool use_cache = true;
  std::optional<std::string> cache_dir;  // overrides the environment
};

const std::vector<std::string>& commands();

/// Runs one job. Returns 0 for a definitive result, 2 when the result is
/// inconclusive at the chosen bounds, 1 on error (message on `err`).
int run_command(const JobSpec& spec, std::ostream& out, std::ostream& err);

}  // namespace vcwl
