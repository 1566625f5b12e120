#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "traces/commutation.hpp"
#include "traces/series.hpp"

namespace traces {

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Graph text format: the first content line lists the letters in canonical
/// order; each further content line names one commuting pair. Blank lines and
/// lines starting with '#' are ignored. Repeated pairs are harmless.
CommutationGraph parse_graph(std::istream& in);
CommutationGraph load_graph(const std::filesystem::path& path);

namespace cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// 1 iff the report lists a counterexample.
inline int exit_code(const BisectionReport& report) {
  return report.ok() ? kExitOk : kExitVerificationFailed;
}

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cli

}  // namespace traces
