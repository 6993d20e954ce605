#pragma once

// Command dispatch behind the hyptube tool. Kept in the library so tests can
// drive every command without spawning a process.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "hyptube/group_file.hpp"
#include "hyptube/insulator.hpp"

namespace hyptube {

enum class OutputFormat { Text, Json };

struct RunConfig {
  int max_word_length = 6;
  double cutoff = 4.0;
  double tol = kDefaultTol;
  std::size_t budget = kDefaultTripleBudget;
  std::uint64_t seed = 0;  // rotation of the raster cross-check in `insulator`
  OutputFormat format = OutputFormat::Text;

  std::optional<std::string> geodesic;  // default: first geodesic in the file

  // lemma120 table; the (log 3)/2 row is always included.
  double from = 0.1;
  double to = 2.0;
  double step = 0.1;
};

struct RunResult {
  std::string output;
  int exit_code = 0;
};

namespace exit_code {
inline constexpr int kAffirmative = 0;
inline constexpr int kNegative = 1;
inline constexpr int kInconclusive = 2;
inline constexpr int kInputError = 3;
inline constexpr int kFailure = 4;
}  // namespace exit_code

/// kInputError for malformed files, names and arguments; kFailure otherwise.
int exit_code_for(ErrorKind kind);

/// Commands: info, spectrum, tube, insulator, check, lemma120. All but
/// lemma120 need a group file. Library errors are caught and rendered into
/// the output with their exit code.
RunResult run(std::string_view command, const std::optional<GroupFile>& file,
              const RunConfig& config);

inline constexpr std::string_view kReportSchema = "hyptube-report";
inline constexpr int kReportSchemaVersion = 1;

}  // namespace hyptube
