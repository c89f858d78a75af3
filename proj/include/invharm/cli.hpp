#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace invharm::cli {

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitResource = 3;

enum class Format { Json, Csv, Text };

struct RunConfig {
  std::string locus = "matchings";
  int n = -1;
  std::optional<int> a;
  std::optional<int> max_deg;
  bool modular = false;
  int threads = 1;
  Format format = Format::Text;
  std::string out_path;
  int n_min = 0;
  int n_max = 12;
  bool equivariant = false;
  std::optional<int> search_max_n;
  int oracle_max_n = 6;
  int table_bound = 15;
};

/// Runs one command; `args` excludes the program name. Returns the process
/// exit code: 0 success, 1 mathematical failure, 2 usage, 3 resource bound.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace invharm::cli
