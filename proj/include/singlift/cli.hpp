#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "singlift/ideal.hpp"
#include "singlift/rational.hpp"

namespace singlift {

// Parse failure with the 1-based line it occurred on.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Parsed problem description:
//   dim N
//   char p            (optional)
//   ideal e=a/b       (one block per factor)
//   <N integers>      (one generator per line)
//   <blank line>
struct ProblemFile {
  Int dim;
  std::optional<Int> characteristic;
  MultiIdeal ideal;

  // Canonical re-serialization: minimal sorted generators, normalized
  // exponents. Parsing the canonical form reproduces it byte for byte.
  std::string canonical() const;
};

ProblemFile parse_problem_file(std::istream& in);
ProblemFile load_problem_file(const std::string& path);

// Command-line entry point; args excludes the program name. Results go to
// out, diagnostics to err. Exit code: 0 success, 1 parse or usage error,
// 2 inconclusive certificate or nothing found within the cap, 3 suite failure.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace singlift
