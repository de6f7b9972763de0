#pragma once

// Command-line front end. parse() validates argv into a Command; execute()
// runs it, writing reports to `out` and diagnostics to `err`.
//
// Exit codes: 0 every verdict proved or held, 1 a statement was refuted,
// 2 usage or internal error.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "planecong/partitions.hpp"

namespace planecong::cli {

enum class OutputFormat { Text, Json };

struct SeriesCmd {
  std::string kind;  // plane | head | multi | restricted | beta
  unsigned k = 1;
  std::uint32_t modulus = 0;
  std::size_t order = 0;
  ColoredPartMultiset parts;
};

struct PeriodCmd {
  unsigned prime = 0;
  unsigned exponent = 1;
  std::optional<ColoredPartMultiset> parts;  // S_prime when unset
  bool check = false;
};

struct VerifyCmd {
  unsigned k = 0;
  std::uint32_t modulus = 0;
  unsigned stride = 0;
  std::vector<unsigned> lhs;
  std::vector<unsigned> rhs;
  std::string method = "auto";
  std::uint64_t horizon = 500;
};

struct WitnessCmd {
  std::string which;
  std::uint64_t horizon = 500;
};

struct SearchCmd {
  unsigned prime = 0;
  unsigned max_terms = 1;
  unsigned workers = 1;
};

struct ScanCmd {
  unsigned prime_limit = 31;
  std::optional<std::uint64_t> horizon;
  unsigned workers = 1;
};

struct OracleCmd {
  std::string kind;  // plane | restricted | multi
  unsigned n = 0;
  unsigned k = 1;
  ColoredPartMultiset parts;
};

using Action = std::variant<SeriesCmd, PeriodCmd, VerifyCmd, WitnessCmd,
                            SearchCmd, ScanCmd, OracleCmd>;

struct Command {
  OutputFormat format = OutputFormat::Text;
  Action action;
};

class UsageError : public std::runtime_error {
public:
  explicit UsageError(const std::string& what, bool help = false)
      : std::runtime_error(what), help_(help) {}
  /// The message is help text requested with --help.
  bool is_help() const noexcept { return help_; }

private:
  bool help_;
};

/// argv without the program name.
Command parse(const std::vector<std::string>& args);

int execute(const Command& cmd, std::ostream& out, std::ostream& err);

/// parse + execute with usage errors mapped to exit code 2.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "1,2,5" -> {1,2,5}; "0-terms" -> {}.
std::vector<unsigned> parse_residues(const std::string& text, const std::string& flag);

/// "1:1,2:2,5:1" -> {(1,1),(2,2),(5,1)}; a bare part means one color.
ColoredPartMultiset parse_parts(const std::string& text, const std::string& flag);

}  // namespace planecong::cli
